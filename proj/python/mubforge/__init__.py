"""Exact construction and certification of mutually unbiased bases generated
by powers of a single unitary matrix, with the orthogonal Cartan
decompositions that come with them.

Everything numerically meaningful is computed in exact cyclotomic arithmetic
in the C++ core; this package parses the exact-JSON artifacts into plain
dicts. Rational numbers appear as [numerator, denominator] decimal strings.
"""

import json as _json

from ._core import (
    SCHEMA_VERSION,
    CertificationError,
    InputError,
    ResourceError,
    crosscheck_json,
    decomposition_json,
    family_float_json,
    family_json,
    fixture_artifact_json,
    fixtures_json,
    flatness_profile_json,
    generator_json,
    lie_profile_json,
    structure_json,
    verify_json,
)

__all__ = [
    "SCHEMA_VERSION",
    "InputError",
    "ResourceError",
    "CertificationError",
    "generate",
    "mub_family",
    "mub_family_float",
    "flatness_profile",
    "lie_decomposition",
    "lie_profile",
    "structure_report",
    "verify",
    "crosscheck",
    "fixtures",
    "fixture_artifact",
]


def generate(p, a, lambda_index=0, seed_index=0, max_q=32):
    """The canonical generator D for q = p^a: unitary, det 1, order q+1."""
    return _json.loads(generator_json(p, a, lambda_index, seed_index, max_q))


def mub_family(p, a, lambda_index=0, seed_index=0, max_q=32):
    """The certified family of pairwise mutually unbiased bases."""
    return _json.loads(family_json(p, a, lambda_index, seed_index, max_q))


def mub_family_float(p, a, digits=15, max_q=32):
    return _json.loads(family_float_json(p, a, digits, max_q))


def flatness_profile(p, a, max_q=32):
    return _json.loads(flatness_profile_json(p, a, max_q))


def lie_decomposition(p, a, algebra="sl", max_q=8):
    """Certified orthogonal Cartan decomposition of sl_q or sp_q (p = 2)."""
    return _json.loads(decomposition_json(p, a, algebra, max_q))


def lie_profile(p, a, max_q=32):
    """Report-only conjugation orbit of the summands (any p)."""
    return _json.loads(lie_profile_json(p, a, max_q))


def structure_report(p, a, max_q=32):
    return _json.loads(structure_json(p, a, max_q))


def verify(artifact):
    """Re-verify an artifact (dict or JSON text); returns the certificate."""
    text = artifact if isinstance(artifact, str) else _json.dumps(artifact)
    return _json.loads(verify_json(text))


def crosscheck(p, a, tol=1e-9, max_q=32):
    return _json.loads(crosscheck_json(p, a, tol, max_q))


def fixtures():
    return _json.loads(fixtures_json())


def fixture_artifact(name):
    return _json.loads(fixture_artifact_json(name))
