from . import fpp, kernel, model, oracle, solver
from .util import registry  # noqa: F401
