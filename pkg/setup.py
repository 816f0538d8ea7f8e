from setuptools import setup, find_packages


def setup_package():
    setup(
        name="edge-clique-partition",
        packages=find_packages(),
    )


if __name__ == "__main__":
    setup_package()
