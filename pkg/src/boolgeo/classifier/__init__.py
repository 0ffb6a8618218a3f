# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Classification of C-algebras, geometric equivalence, quasi-identities and E_k fixtures."""

__all__ = [
    "AgreementReport",
    "AlgebraClass",
    "BUILTIN_FIXTURES",
    "ClassVerdict",
    "ConstantCorrespondence",
    "EkCertificate",
    "EkFixture",
    "FixtureReader",
    "GeomKind",
    "GeomVerdict",
    "QuasiIdentityResult",
    "RandomSystemGenerator",
    "builtin_fixture",
    "check_shared_constants",
    "classify",
    "classify_compactness",
    "classify_consistently_noetherian",
    "classify_noetherian",
    "classify_weakly_noetherian",
    "evaluate_quasi_identity",
    "geom_equivalent",
    "load_fixture",
    "parse_fixture",
    "resolve_fixture",
    "sample_quasi_identity_agreement",
    "sample_radical_agreement",
    "verify_ek_fixture",
]

from .certificate import EkCertificate, verify_ek_fixture
from .fixtures import (
    BUILTIN_FIXTURES,
    EkFixture,
    FixtureReader,
    builtin_fixture,
    load_fixture,
    parse_fixture,
    resolve_fixture,
)
from .geometric import ConstantCorrespondence, GeomKind, GeomVerdict, check_shared_constants, geom_equivalent
from .noetherian import (
    classify,
    classify_compactness,
    classify_consistently_noetherian,
    classify_noetherian,
    classify_weakly_noetherian,
)
from .quasi_identities import QuasiIdentityResult, evaluate_quasi_identity
from .sampling import (
    AgreementReport,
    RandomSystemGenerator,
    sample_quasi_identity_agreement,
    sample_radical_agreement,
)
from .verdicts import AlgebraClass, ClassVerdict
