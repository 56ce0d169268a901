"""Gaussian moments, Price identities and Weyl quantization under CCR."""

from ._weylprice import *  # noqa: F401,F403
from ._weylprice import __version__

import json as _json


def suite_report(config=None):
    """Run the acceptance suite; `config` is a dict, a JSON string or None for all criteria."""
    if isinstance(config, dict):
        config = _json.dumps(config)
    return _json.loads(run_suite(config or ""))
