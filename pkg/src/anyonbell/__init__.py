"""Bell-inequality tests with anyons: fusion spaces, braiding and witnesses."""

__version__ = "0.1.0"

from .models import AnyonModel, get_model  # noqa: E402
from .sector import build_sector_basis, phi0_state  # noqa: E402
from .observables import build_I3, build_W, lhv_bound_oracle  # noqa: E402
from .braiding import BraidWord, apply_word, braid_generators  # noqa: E402

__all__ = [
    "AnyonModel", "BraidWord", "apply_word", "braid_generators", "build_I3",
    "build_W", "build_sector_basis", "get_model", "lhv_bound_oracle", "phi0_state",
]
