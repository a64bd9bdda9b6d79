"""
Closed-form knot invariants of 3-braid closures, keyed off normal forms.

Every formula here consumes a Garside or Murasugi normal form (module
normal_form) and produces exact integers or rationals.  Values are exact
unless explicitly an interval; absence (None) means no closed form applies
to the form at hand, which is information, not an error.

Sign conventions, fixed across the package:
  * signature: sigma(T(3,2)) = -2 (positive torus knots are negative);
  * upsilon: upsilon(T(2,3)) = -1, and upsilon(-K) = -upsilon(K);
  * Rasmussen s is reported with s = sigma = 2*upsilon on quasialternating
    closures (so s(T(2,3)) = -2 here); this is the orientation convention
    pinned by the slice and quasialternating 8-crossing examples in the
    acceptance suite, and it is the mirror of the other common convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .normal_form import (
    ConjugacyCertificate,
    GarsideA,
    GarsideB,
    GarsideC,
    GarsideD,
    GarsideForm,
    InternalInconsistencyError,
    MurasugiForm,
    MurasugiGeneric,
    MurasugiTorus,
    garside_normal_form,
    murasugi_from_garside,
    realize,
)
from .words import BraidWord


class NotAKnotError(ValueError):
    """The closure of the given braid is a link, not a knot."""


@dataclass(frozen=True)
class IntInterval:
    """Integer interval [lo, hi]; exact when the endpoints agree."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @staticmethod
    def point(value: int) -> IntInterval:
        return IntInterval(value, value)

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi


def _require_knot(form: GarsideForm | MurasugiForm) -> None:
    if not realize(form).is_knot():
        raise NotAKnotError(f"closure of {form} is not a knot")


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InternalInconsistencyError(f"{what} = {value} is not an integer")
    return int(value)


def _torus_family(form: GarsideB | MurasugiTorus) -> tuple[int, int]:
    """(ell, k) with the closure +-T(3, 3*ell + k); k in {1, 2}."""
    if isinstance(form, GarsideB):
        if form.p == 2:
            raise NotAKnotError("half-twist class closes to a link")
        k = 1 if form.p == 1 else 2
    else:
        k = 1 if form.variant == "ab" else 2
    return form.ell, k


def _torus_upsilon(ell: int, k: int) -> int:
    # positive families: upsilon(T(3,3m+1)) = -2m, upsilon(T(3,3m+2)) = -2m-1;
    # for ell < 0 the closure is the mirror of the complementary family
    if ell >= 0:
        return -2 * ell if k == 1 else -2 * ell - 1
    m = -ell - 1
    return 2 * m + 1 if k == 1 else 2 * m


def upsilon(form: GarsideForm | MurasugiForm) -> int:
    """The concordance invariant upsilon of the knot closure."""
    _require_knot(form)
    if isinstance(form, MurasugiGeneric):
        val = Fraction(sum(p - q for p, q in form.pairs), 2) - 2 * form.ell
        return _as_int(val, "upsilon")
    if isinstance(form, (GarsideB, MurasugiTorus)):
        return _torus_upsilon(*_torus_family(form))
    if isinstance(form, GarsideC):
        val = -Fraction(sum(p + q for p, q in form.pairs), 2) + form.r - 2 * form.ell
        return _as_int(val, "upsilon")
    if isinstance(form, GarsideD):
        total = sum(p + q for p, q in form.pairs) + form.p_r
        val = -Fraction(total, 2) + form.r - 2 * form.ell - Fraction(3, 2)
        return _as_int(val, "upsilon")
    raise NotAKnotError(f"{form} never closes to a knot")


def signature(form: GarsideForm | MurasugiForm) -> int:
    """Classical knot signature of the closure, sigma(T(3,2)) = -2."""
    _require_knot(form)
    if isinstance(form, MurasugiGeneric):
        return sum(p - q for p, q in form.pairs) - 4 * form.ell
    if isinstance(form, (GarsideB, MurasugiTorus)):
        ell, k = _torus_family(form)
        ups = _torus_upsilon(ell, k)
        if ell > 0 and ell % 2 == 1:
            return 2 * ups - 2
        if ell < 0 and (-ell - 1) % 2 == 1:
            return 2 * ups + 2
        return 2 * ups
    if isinstance(form, (GarsideC, GarsideD)):
        # these classes contain no braid-index-3 torus closures, so the
        # exceptional signature correction never applies here
        return 2 * upsilon(form)
    raise NotAKnotError(f"{form} never closes to a knot")


def _is_positive_form(form: GarsideForm | MurasugiForm) -> bool:
    return (
        isinstance(form, (GarsideA, GarsideB, GarsideC, GarsideD, MurasugiTorus))
        and form.ell >= 0
    )


def _positive_genus(form) -> int:
    # slice-Bennequin for positive 3-braid knot closures: g = (writhe - 2)/2
    wr = realize(form).writhe()
    if wr % 2:
        raise InternalInconsistencyError("odd writhe on a knot closure")
    return (wr - 2) // 2


def rasmussen_s(form: GarsideForm | MurasugiForm) -> tuple[int, str] | None:
    """Rasmussen invariant of the closure, or None when no formula applies.

    Returns (value, provenance); provenance 'positive-braid' marks the
    extension s = -2g beyond the Murasugi-generic and alternating cases.
    """
    if not realize(form).is_knot():
        raise NotAKnotError(f"closure of {form} is not a knot")
    if isinstance(form, MurasugiGeneric):
        diff = sum(p - q for p, q in form.pairs)
        if form.ell > 0:
            return diff - 6 * form.ell + 2, "quasipositive-twist"
        if form.ell < 0:
            return diff - 6 * form.ell - 2, "quasinegative-twist"
        return diff, "alternating"
    if _is_positive_form(form):
        return -2 * _positive_genus(form), "positive-braid"
    return None


def genus_tau(form: GarsideForm | MurasugiForm) -> tuple[int | None, int | None, int] | None:
    """(3-genus, 4-genus, tau) where a closed form exists.

    Positive braid closures get the full slice-Bennequin triple; an
    alternating closure (generic form with no twisting) determines tau
    alone.  None otherwise.
    """
    if not realize(form).is_knot():
        raise NotAKnotError(f"closure of {form} is not a knot")
    if _is_positive_form(form):
        g = _positive_genus(form)
        return g, g, g
    if isinstance(form, MurasugiGeneric) and form.ell == 0:
        return None, None, -signature(form) // 2
    return None


@dataclass(frozen=True)
class AltDistances:
    alt: IntInterval
    dalt: IntInterval
    turaev_genus: IntInterval


def alternating_distances(form: GarsideForm | MurasugiForm) -> AltDistances:
    """Alternation number, dealternating number and Turaev genus.

    Exact for torus closures and for positive classes; otherwise the
    twisting degree pins each invariant to a two-point interval.
    """
    _require_knot(form)
    if isinstance(form, (GarsideB, MurasugiTorus)):
        ell, _ = _torus_family(form)
        exact = ell if ell >= 0 else -ell - 1
        iv = IntInterval.point(exact)
        return AltDistances(iv, iv, iv)
    if isinstance(form, (GarsideC, GarsideD)):
        twist = form.ell + form.r
        if form.ell >= 0:
            iv = IntInterval.point(form.r + form.ell - 1)
        elif twist == 0:
            iv = IntInterval.point(0)
        else:
            iv = IntInterval(abs(twist) - 1, abs(twist))
        return AltDistances(iv, iv, iv)
    if isinstance(form, MurasugiGeneric):
        if form.ell == 0:
            iv = IntInterval.point(0)
        else:
            iv = IntInterval(abs(form.ell) - 1, abs(form.ell))
        return AltDistances(iv, iv, iv)
    raise NotAKnotError(f"{form} never closes to a knot")


def minimal_positive_switches(form: GarsideForm | MurasugiForm) -> int | None:
    """Minimal r so the closure is that of a^p1 b^q1 ... a^pr b^qr, all
    exponents positive; defined for positive braid closures only."""
    if not realize(form).is_knot():
        raise NotAKnotError(f"closure of {form} is not a knot")
    if not _is_positive_form(form):
        return None
    if isinstance(form, (GarsideB, MurasugiTorus)):
        return form.ell + 1
    return form.r + form.ell


def fdtc(form: GarsideForm) -> Fraction:
    """Fractional Dehn twist coefficient; defined for every braid."""
    if isinstance(form, GarsideA):
        return Fraction(form.ell)
    if isinstance(form, GarsideB):
        return Fraction(form.p + 1, 6) + form.ell
    if isinstance(form, (GarsideC, GarsideD)):
        return Fraction(form.r + form.ell)
    raise TypeError(f"fdtc expects a Garside form, got {form!r}")


def homogenized_upsilon(form: GarsideForm) -> Fraction:
    """Homogenized upsilon quasimorphism, exact rational."""
    if isinstance(form, GarsideA):
        return -Fraction(form.p, 2) - 2 * form.ell
    if isinstance(form, GarsideB):
        return -Fraction(form.p + 1, 3) - 2 * form.ell
    if isinstance(form, GarsideC):
        total = sum(p + q for p, q in form.pairs)
        return -Fraction(total, 2) + form.r - 2 * form.ell
    if isinstance(form, GarsideD):
        total = sum(p + q for p, q in form.pairs) + form.p_r
        return -Fraction(total, 2) + form.r - 2 * form.ell - Fraction(3, 2)
    raise TypeError(f"homogenized_upsilon expects a Garside form, got {form!r}")


def derived_concordance(ups: int, sig: int) -> tuple[int, int]:
    """(Ballinger t, lower bound for the nonorientable 4-genus)."""
    return -2 * ups, abs(ups - sig // 2)


def upsilon_upper_bound_slope(form: GarsideForm | MurasugiForm) -> Fraction | None:
    """Best cobordism slope bound on the upsilon function; positive braid
    closures only, where it is tight at the right endpoint."""
    if not realize(form).is_knot():
        raise NotAKnotError(f"closure of {form} is not a knot")
    if not _is_positive_form(form):
        return None
    if isinstance(form, (GarsideB, MurasugiTorus)):
        ell, k = _torus_family(form)
        p = 1 if k == 1 else 3
        slope = -Fraction(p + 1, 2) + 1 - 2 * ell
    elif isinstance(form, GarsideC):
        slope = -Fraction(sum(p + q for p, q in form.pairs), 2) + form.r - 2 * form.ell
    else:
        total = sum(p + q for p, q in form.pairs) + form.p_r
        slope = -Fraction(total, 2) + form.r - 2 * form.ell - Fraction(3, 2)
    if slope != upsilon(form):
        raise InternalInconsistencyError(
            f"slope bound {slope} does not meet upsilon({form})"
        )
    return slope


@dataclass(frozen=True)
class InvariantReport:
    """Everything the pipeline can say about one braid word.

    None means no closed form applies (links carry only the braid-level
    fields).  `flags` records, per field, 'exact', 'interval' or 'absent',
    plus the provenance of the Rasmussen value.
    """

    word: BraidWord
    garside: GarsideForm
    murasugi: MurasugiForm
    garside_certificate: ConjugacyCertificate
    murasugi_certificate: ConjugacyCertificate
    components: int
    is_knot: bool
    fdtc: Fraction
    homogenized_upsilon: Fraction
    upsilon: int | None = None
    signature: int | None = None
    rasmussen_s: int | None = None
    genus3: int | None = None
    genus4: int | None = None
    tau: int | None = None
    alt: IntInterval | None = None
    dalt: IntInterval | None = None
    turaev_genus: IntInterval | None = None
    minimal_r: int | None = None
    ballinger_t: int | None = None
    nonorientable_g4_lower: int | None = None
    upsilon_slope: Fraction | None = None
    flags: dict | None = None


def build_report(word: BraidWord, check: bool = True) -> InvariantReport:
    """Run the full pipeline on one braid word.

    Classifies into both normal forms (certificates oracle-checked unless
    check=False), evaluates every applicable invariant, and cross-checks
    the Garside-side and Murasugi-side upsilon formulas against each other.
    """
    gform, gcert = garside_normal_form(word, check=check)
    mform, mcert = murasugi_from_garside(gform, gcert, check=check)
    components = word.closure_components()
    knot = components == 1

    flags: dict[str, str] = {"fdtc": "exact", "homogenized_upsilon": "exact"}
    base = dict(
        word=word,
        garside=gform,
        murasugi=mform,
        garside_certificate=gcert,
        murasugi_certificate=mcert,
        components=components,
        is_knot=knot,
        fdtc=fdtc(gform),
        homogenized_upsilon=homogenized_upsilon(gform),
        flags=flags,
    )
    if not knot:
        for name in ("upsilon", "signature", "s", "genus3", "genus4", "tau",
                     "alt", "dalt", "turaev", "minimal_r"):
            flags[name] = "absent"
        return InvariantReport(**base)

    ups_g = upsilon(gform)
    ups_m = upsilon(mform)
    if ups_g != ups_m:
        raise InternalInconsistencyError(
            f"upsilon disagreement {ups_g} vs {ups_m} on {word.display()!r}"
        )
    sig = signature(mform)
    if signature(gform) != sig:
        raise InternalInconsistencyError(
            f"signature disagreement on {word.display()!r}"
        )
    if sig % 2:
        raise InternalInconsistencyError(
            f"odd signature {sig} on {word.display()!r}"
        )
    flags["upsilon"] = flags["signature"] = "exact"

    s_pair = rasmussen_s(mform)
    if s_pair is None:
        s_pair = rasmussen_s(gform)
    if s_pair is None:
        s_val = None
        flags["s"] = "absent"
    else:
        s_val, s_src = s_pair
        flags["s"] = f"exact ({s_src})"

    gt = genus_tau(gform)
    if gt is None:
        gt = genus_tau(mform)
    if gt is None:
        g3 = g4 = tau_val = None
        flags["genus3"] = flags["genus4"] = flags["tau"] = "absent"
    else:
        g3, g4, tau_val = gt
        flags["genus3"] = "exact" if g3 is not None else "absent"
        flags["genus4"] = "exact" if g4 is not None else "absent"
        flags["tau"] = "exact"

    dist = alternating_distances(gform)
    for name, iv in (("alt", dist.alt), ("dalt", dist.dalt),
                     ("turaev", dist.turaev_genus)):
        flags[name] = "exact" if iv.exact else "interval"

    min_r = minimal_positive_switches(gform)
    flags["minimal_r"] = "exact" if min_r is not None else "absent"

    t_val, gamma4 = derived_concordance(ups_g, sig)
    slope = upsilon_upper_bound_slope(gform)

    return InvariantReport(
        upsilon=ups_g,
        signature=sig,
        rasmussen_s=s_val,
        genus3=g3,
        genus4=g4,
        tau=tau_val,
        alt=dist.alt,
        dalt=dist.dalt,
        turaev_genus=dist.turaev_genus,
        minimal_r=min_r,
        ballinger_t=t_val,
        nonorientable_g4_lower=gamma4,
        upsilon_slope=slope,
        **base,
    )
