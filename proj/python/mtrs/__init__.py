"""Multi-twisted Reed-Solomon codes: MDS tests, hulls and enumeration."""

import json

from . import _core
from ._core import DomainError, Field

__all__ = [
    "DomainError",
    "Field",
    "check_mds",
    "min_distance",
    "hull",
    "construct_even",
    "construct_odd",
    "count_mds_double_twisted",
    "run_cli",
]


def _profile(profile):
    return profile if isinstance(profile, str) else json.dumps(profile)


def check_mds(profile, method="bruteforce"):
    """Verdict dict {method, is_mds, witness} for a code profile."""
    return json.loads(_core.check_mds(_profile(profile), method))


def min_distance(profile):
    return _core.min_distance(_profile(profile))


def hull(profile):
    """Gram matrix, its rank and the hull dimension."""
    return json.loads(_core.hull(_profile(profile)))


def construct_even(q, k, t, h, eta):
    return json.loads(_core.construct_even(q, k, list(t), list(h), list(eta)))


def construct_odd(q, k, t, h, eta):
    return json.loads(_core.construct_odd(q, k, list(t), list(h), list(eta)))


def count_mds_double_twisted(q, n, k, criterion="remark44", workers=1):
    return _core.count_mds_double_twisted(q, n, k, criterion, workers)


def run_cli(*args):
    """Runs the command line in-process; returns (exit_code, parsed_json_or_None, stderr)."""
    code, out, err = _core.run_cli([str(a) for a in args])
    return code, (json.loads(out) if out.strip() else None), err
