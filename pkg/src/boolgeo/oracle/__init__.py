# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Definitional oracles and the corpus they are swept over."""

__all__ = [
    "assert_agreement",
    "assert_certificate_passed",
    "assert_consistency_rule",
    "assert_corpus",
    "assert_enumeration_matches_canonical",
    "assert_radical_agrees",
    "assert_split_properties",
    "literal_terms",
    "system_corpus",
]

from .assertions import (
    assert_agreement,
    assert_certificate_passed,
    assert_consistency_rule,
    assert_corpus,
    assert_enumeration_matches_canonical,
    assert_radical_agrees,
    assert_split_properties,
)
from .corpus import literal_terms, system_corpus
