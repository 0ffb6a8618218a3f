# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module with the default limits used by the library and the command line."""

__all__ = [
    "DEFAULT_BLOWUP_LIMIT",
    "DEFAULT_CERTIFICATE_BOUND",
    "DEFAULT_CHUNK_SIZE",
    "DEFAULT_ENUMERATION_BUDGET",
    "DEFAULT_MATERIALISE_LIMIT",
    "DEFAULT_QI_MAX_PREMISES",
    "DEFAULT_QI_SAMPLES",
    "DEFAULT_QI_TERM_DEPTH",
    "DEFAULT_SEED",
    "DEFAULT_SUBSET_CAP",
    "DEFAULT_SURVIVOR_WINDOW",
    "DEFAULT_TERM_DEPTH_BOUND",
]

DEFAULT_BLOWUP_LIMIT: int = 16
"""Maximum number of X variables the normaliser accepts.

The canonical form has 2**n Z variables, so 16 already means 65536 of them.
"""

DEFAULT_ENUMERATION_BUDGET: int = 2**20
"""Maximum number of points an exhaustive enumeration may visit."""

DEFAULT_CHUNK_SIZE: int = 2**16
"""Number of points evaluated per numpy chunk during enumeration."""

DEFAULT_TERM_DEPTH_BOUND: int = 6
"""Minimum family prefix used when deciding membership in a schematic C."""

DEFAULT_MATERIALISE_LIMIT: int = 2**16
"""Largest generated subalgebra that is materialised as an explicit set."""

DEFAULT_SUBSET_CAP: int = 16
"""Largest ``|C|`` for which geometric equivalence enumerates all subsets of C."""

DEFAULT_QI_SAMPLES: int = 500
"""Default number of sampled quasi-identities or systems."""

DEFAULT_QI_MAX_PREMISES: int = 3
"""Maximum number of premises in a sampled quasi-identity."""

DEFAULT_QI_TERM_DEPTH: int = 4
"""Maximum depth of a sampled term."""

DEFAULT_SEED: int = 0
"""Seed used by sampling when none is given."""

DEFAULT_CERTIFICATE_BOUND: int = 50
"""Default prefix bound and solution count for E_k certificates."""

DEFAULT_SURVIVOR_WINDOW: int = 12
"""Largest window {0..w-1} whose elements are all checked by an E_k certificate."""
