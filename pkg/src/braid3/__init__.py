"""Conjugacy normal forms and concordance invariants for 3-braids."""

from .burau import (
    BurauMatrix,
    ConjugacyFingerprint,
    LaurentPoly,
    burau,
    fingerprint,
    words_equal,
)
from .cobordism import (
    AlternatingGenusBounds,
    ClosureFactor,
    CobordismCertificate,
    ConnectedSum,
    PreconditionError,
    SaddleMove,
    TorusFactor,
    alternating_distance_genus_bounds,
    torus_sum_cobordism,
    twist_trick,
)
from .cobordism import verify as verify_cobordism
from .invariants import (
    AltDistances,
    IntInterval,
    InvariantReport,
    NotAKnotError,
    alternating_distances,
    build_report,
    derived_concordance,
    fdtc,
    genus_tau,
    homogenized_upsilon,
    minimal_positive_switches,
    rasmussen_s,
    signature,
    upsilon,
    upsilon_upper_bound_slope,
)
from .normal_form import (
    ConjugacyCertificate,
    DeltaSplit,
    GarsideA,
    GarsideB,
    GarsideC,
    GarsideD,
    GarsideForm,
    InternalInconsistencyError,
    MurasugiForm,
    MurasugiGeneric,
    MurasugiHalfTwist,
    MurasugiPower,
    MurasugiTorus,
    delta_positive_split,
    form_display,
    garside_normal_form,
    murasugi_from_garside,
    murasugi_normal_form,
    realize,
)
from .words import BraidWord, ParseError, Syllable, delta_power, parse

__version__ = "0.1.0"

__all__ = [
    "AltDistances",
    "AlternatingGenusBounds",
    "BraidWord",
    "BurauMatrix",
    "ClosureFactor",
    "CobordismCertificate",
    "ConjugacyCertificate",
    "ConjugacyFingerprint",
    "ConnectedSum",
    "DeltaSplit",
    "GarsideA",
    "GarsideB",
    "GarsideC",
    "GarsideD",
    "GarsideForm",
    "IntInterval",
    "InternalInconsistencyError",
    "InvariantReport",
    "LaurentPoly",
    "MurasugiForm",
    "MurasugiGeneric",
    "MurasugiHalfTwist",
    "MurasugiPower",
    "MurasugiTorus",
    "NotAKnotError",
    "ParseError",
    "PreconditionError",
    "SaddleMove",
    "Syllable",
    "TorusFactor",
    "alternating_distance_genus_bounds",
    "alternating_distances",
    "build_report",
    "burau",
    "delta_positive_split",
    "delta_power",
    "derived_concordance",
    "fdtc",
    "fingerprint",
    "form_display",
    "garside_normal_form",
    "genus_tau",
    "homogenized_upsilon",
    "minimal_positive_switches",
    "murasugi_from_garside",
    "murasugi_normal_form",
    "parse",
    "rasmussen_s",
    "realize",
    "signature",
    "torus_sum_cobordism",
    "twist_trick",
    "upsilon",
    "upsilon_upper_bound_slope",
    "verify_cobordism",
    "words_equal",
]
