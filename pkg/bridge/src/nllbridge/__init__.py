"""HTTP bridge exposing per-token negative log-likelihoods.

The server speaks a small JSON protocol: POST /v1/nll with {"text": ...}
returns {"tokens", "nll", "model_id", "truncated"}; GET /healthz reports
liveness.  A built-in uniform-vocabulary identity model makes the
protocol testable without any model weights.
"""

from .models import IdentityModel
from .server import create_app

__all__ = ["IdentityModel", "create_app"]
__version__ = "0.1.0"
