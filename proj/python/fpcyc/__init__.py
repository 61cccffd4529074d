"""Free products of finite cyclic groups: words, automorphisms, trees, invariants."""

import json

from ._core import (
    Automorphism,
    FAHypothesisError,
    ParseError,
    Signature,
    Word,
    amalgam,
    census,
    census_brute_force,
    fa_certificate_json as _fa_certificate_json,
    fuzz,
    is_characteristic,
    occurrences,
    run_cli,
    verify_fr3,
    verify_generator_relations,
    verify_phipsi,
)


def fa_certificate(signature):
    """The pair certificate as a dict (same schema as the CLI's JSON output)."""
    return json.loads(_fa_certificate_json(signature))


__all__ = [
    "Automorphism",
    "FAHypothesisError",
    "ParseError",
    "Signature",
    "Word",
    "amalgam",
    "census",
    "census_brute_force",
    "fa_certificate",
    "fuzz",
    "is_characteristic",
    "occurrences",
    "run_cli",
    "verify_fr3",
    "verify_generator_relations",
    "verify_phipsi",
]
