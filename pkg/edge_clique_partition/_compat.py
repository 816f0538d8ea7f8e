import sys

# int.bit_count is only available from Python 3.10 onwards.
if sys.version_info >= (3, 10):

    def popcount(value: int) -> int:
        return value.bit_count()

else:

    def popcount(value: int) -> int:
        return bin(value).count("1")
