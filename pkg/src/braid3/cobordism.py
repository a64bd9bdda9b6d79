"""
Explicit saddle-move cobordisms between 3-braid closures and connected
sums of T(2, odd) torus knots, with Euler-characteristic bookkeeping.

A certificate records the starting braid word, a symbolic end state (a
connected sum of torus knots, possibly together with a braid closure),
and the saddle moves in between.  Each saddle changes the Euler
characteristic by -1; with knots on both ends the genus is -chi/2.  The
replay in verify() recomputes all of that from scratch and also checks
the concordance inequality  |upsilon(start) - upsilon(end)| <= genus,
so a tampered certificate is rejected with a reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .invariants import upsilon
from .normal_form import (
    GarsideB,
    GarsideC,
    GarsideD,
    GarsideForm,
    InternalInconsistencyError,
    garside_normal_form,
    realize,
)
from .words import GEN_A, GEN_B, BraidWord


class PreconditionError(ValueError):
    """The construction's hypotheses are not met by the input."""


INSERT = "insert_generator"
DELETE = "delete_generator"
SPLIT = "split_to_connected_sum"


@dataclass(frozen=True)
class SaddleMove:
    """One 1-handle attachment; every kind costs Euler characteristic 1."""

    kind: str
    position: int
    generator: str

    def __post_init__(self):
        if self.kind not in (INSERT, DELETE, SPLIT):
            raise ValueError(f"unknown saddle kind {self.kind}")


@dataclass(frozen=True)
class TorusFactor:
    """T(2, q) for odd q >= 1; q = 1 is the unknot."""

    q: int

    def __post_init__(self):
        if self.q < 1 or self.q % 2 == 0:
            raise ValueError("torus factor parameter must be odd and positive")

    def upsilon(self) -> int:
        return -(self.q - 1) // 2

    def display(self) -> str:
        return f"T(2,{self.q})"


@dataclass(frozen=True)
class ClosureFactor:
    """The closure of an explicit braid word (must be a knot)."""

    word: BraidWord

    def upsilon(self) -> int:
        form, _ = garside_normal_form(self.word)
        return upsilon(form)

    def display(self) -> str:
        return f"closure({self.word.display()})"


@dataclass(frozen=True)
class ConnectedSum:
    """Connected sum of knot factors; upsilon adds over factors."""

    factors: tuple

    def upsilon(self) -> int:
        return sum(f.upsilon() for f in self.factors)

    def is_knot(self) -> bool:
        return all(
            isinstance(f, TorusFactor) or f.word.is_knot() for f in self.factors
        )

    def display(self) -> str:
        return " # ".join(f.display() for f in self.factors)


@dataclass(frozen=True)
class CobordismCertificate:
    kind: str  # "torus-sum" | "twist"
    start: BraidWord
    end: ConnectedSum
    moves: tuple[SaddleMove, ...]
    euler_char: int
    genus: Fraction


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _alternating_pairs(word: BraidWord) -> list[tuple[int, int]]:
    """Exponent pairs of a positive word of shape a^p1 b^q1 ... a^pr b^qr."""
    syl = word.syllables
    if not syl or len(syl) % 2:
        raise PreconditionError("word is not an alternating positive a/b word")
    pairs = []
    for i in range(0, len(syl), 2):
        p, q = syl[i], syl[i + 1]
        if p.gen != GEN_A or q.gen != GEN_B or p.exp < 1 or q.exp < 1:
            raise PreconditionError("word is not an alternating positive a/b word")
        pairs.append((p.exp, q.exp))
    return pairs


def _cyclic_positive_normalize(word: BraidWord) -> BraidWord:
    """Rotate a positive word (a conjugation, so the closure is unchanged)
    into the shape a^p1 b^q1 ... a^pr b^qr."""
    if any(s.exp < 0 for s in word):
        raise PreconditionError("word must be positive")
    if not word:
        raise PreconditionError("word must be nonempty")
    runs = [[s.gen, s.exp] for s in word]
    if len(runs) == 1:
        raise PreconditionError("word uses only one generator")
    if runs[0][0] == runs[-1][0]:
        head = runs.pop()
        runs[0][1] += head[1]
    if runs[0][0] == GEN_B:
        runs = runs[1:] + runs[:1]
    return BraidWord.from_runs([(g, e) for g, e in runs])


def torus_sum_cobordism(word: BraidWord) -> CobordismCertificate:
    """Cobordism from the closure of a positive alternating-shape word to a
    connected sum of T(2, odd) torus knots.

    With r switch pairs, the parity of each b-run (and of the merged
    a-total) is repaired by inserting single generators, one saddle each;
    r - 1 further saddles split the b-runs off as their own factors while
    the a-runs coalesce.  genus = (r - 1 + inserts) / 2.
    """
    if not word.is_knot():
        raise PreconditionError("closure is not a knot")
    start = _cyclic_positive_normalize(word)
    pairs = _alternating_pairs(start)
    r = len(pairs)

    moves: list[SaddleMove] = []
    a_total = sum(p for p, _ in pairs)
    eps_p = (a_total + 1) % 2
    if eps_p:
        moves.append(SaddleMove(INSERT, 0, GEN_A))
    q_repaired = []
    for i, (_, q) in enumerate(pairs):
        eps_i = (q + 1) % 2
        if eps_i:
            moves.append(SaddleMove(INSERT, 2 * i + 1, GEN_B))
        q_repaired.append(q + eps_i)
    moves.extend(SaddleMove(SPLIT, 2 * i + 1, GEN_B) for i in range(r - 1))

    eps = eps_p + sum((q + 1) % 2 for _, q in pairs)
    end = ConnectedSum(
        (TorusFactor(a_total + eps_p),) + tuple(TorusFactor(q) for q in q_repaired)
    )
    cert = CobordismCertificate(
        kind="torus-sum",
        start=start,
        end=end,
        moves=tuple(moves),
        euler_char=-(r - 1 + eps),
        genus=Fraction(r - 1 + eps, 2),
    )
    result = verify(cert)
    if not result:
        raise InternalInconsistencyError(
            f"freshly built certificate failed: {result.reasons}"
        )
    return cert


def twist_trick(gamma: BraidWord, n: int) -> CobordismCertificate:
    """Genus-1 cobordism from the closure of gamma * b^(2n) to
    closure(gamma) # T(2, 2n+1): one inserted generator completes the
    even twist region to an odd one, one split peels it off."""
    if n < 1:
        raise PreconditionError("twist count n must be >= 1")
    if not gamma.is_knot():
        raise PreconditionError("closure of gamma is not a knot")
    start = gamma * BraidWord.from_runs([(GEN_B, 2 * n)])
    pos = len(start.syllables) - 1
    moves = (
        SaddleMove(INSERT, pos, GEN_B),
        SaddleMove(SPLIT, pos, GEN_B),
    )
    end = ConnectedSum((ClosureFactor(gamma), TorusFactor(2 * n + 1)))
    cert = CobordismCertificate(
        kind="twist",
        start=start,
        end=end,
        moves=moves,
        euler_char=-2,
        genus=Fraction(1),
    )
    result = verify(cert)
    if not result:
        raise InternalInconsistencyError(
            f"freshly built certificate failed: {result.reasons}"
        )
    return cert


def _replay_torus_sum(cert: CobordismCertificate, reasons: list[str]) -> None:
    try:
        pairs = _alternating_pairs(cert.start)
    except PreconditionError:
        reasons.append("start word does not fit the construction")
        return
    r = len(pairs)
    a_total = sum(p for p, _ in pairs)
    expected: list[SaddleMove] = []
    if a_total % 2 == 0:
        expected.append(SaddleMove(INSERT, 0, GEN_A))
    q_repaired = []
    for i, (_, q) in enumerate(pairs):
        if q % 2 == 0:
            expected.append(SaddleMove(INSERT, 2 * i + 1, GEN_B))
        q_repaired.append(q + (q + 1) % 2)
    expected.extend(SaddleMove(SPLIT, 2 * i + 1, GEN_B) for i in range(r - 1))
    if list(cert.moves) != expected:
        reasons.append("move sequence does not match construction")
    want_end = (TorusFactor(a_total + (a_total + 1) % 2),) + tuple(
        TorusFactor(q) for q in q_repaired
    )
    if cert.end.factors != want_end:
        reasons.append("end expression does not match construction")


def _replay_twist(cert: CobordismCertificate, reasons: list[str]) -> None:
    factors = cert.end.factors
    if (
        len(factors) != 2
        or not isinstance(factors[0], ClosureFactor)
        or not isinstance(factors[1], TorusFactor)
    ):
        reasons.append("end expression does not match construction")
        return
    gamma, torus = factors
    if torus.q < 3:
        reasons.append("twist region must have n >= 1")
        return
    n = (torus.q - 1) // 2
    want_start = gamma.word * BraidWord.from_runs([(GEN_B, 2 * n)])
    if cert.start != want_start:
        reasons.append("start word does not match construction")
    pos = len(want_start.syllables) - 1
    want_moves = (
        SaddleMove(INSERT, pos, GEN_B),
        SaddleMove(SPLIT, pos, GEN_B),
    )
    if cert.moves != want_moves:
        reasons.append("move sequence does not match construction")


def verify(cert: CobordismCertificate) -> VerificationResult:
    """Replay a certificate from scratch; collects every failed check."""
    reasons: list[str] = []

    chi = -len(cert.moves)
    if cert.euler_char != chi:
        reasons.append("euler characteristic mismatch")

    start_knot = cert.start.is_knot()
    end_knot = cert.end.is_knot()
    if not (start_knot and end_knot):
        reasons.append("boundary components are not knots")
    elif chi % 2:
        reasons.append("non-integral genus")
    else:
        genus = Fraction(-chi, 2)
        if cert.genus != genus:
            reasons.append("genus mismatch")
        if genus < 0:
            reasons.append("negative genus")

    if cert.kind == "torus-sum":
        _replay_torus_sum(cert, reasons)
    elif cert.kind == "twist":
        _replay_twist(cert, reasons)
    else:
        reasons.append(f"unknown certificate kind {cert.kind!r}")

    if start_knot and end_knot:
        try:
            form, _ = garside_normal_form(cert.start)
            gap = abs(upsilon(form) - cert.end.upsilon())
            if gap > cert.genus:
                reasons.append("upsilon gap exceeds genus")
        except Exception as exc:  # pragma: no cover - defensive
            reasons.append(f"upsilon evaluation failed: {exc}")

    return VerificationResult(not reasons, tuple(reasons))


@dataclass(frozen=True)
class AlternatingGenusBounds:
    """Bounds on the minimal genus of a cobordism to an alternating knot."""

    lower: Fraction
    upper: Fraction
    lower_knot_bound: int  # ceiling of `lower`; cobordism genus is integral
    certificate: CobordismCertificate


def _witness_word(form: GarsideForm) -> BraidWord:
    """A positive braid word conjugate to the form with the minimal number
    of switch pairs (r + l for cases C/D, l + 1 for the torus case)."""
    runs: list[tuple[str, int]] = []
    if isinstance(form, GarsideB):
        runs = [(GEN_A, 2 * form.ell + form.p), (GEN_B, 1)]
        runs += [(GEN_A, 2), (GEN_B, 2)] * form.ell
    elif isinstance(form, GarsideC):
        (p1, q1), rest = form.pairs[0], form.pairs[1:]
        if form.ell == 0:
            for p, q in form.pairs:
                runs += [(GEN_A, p), (GEN_B, q)]
        else:
            runs = [(GEN_A, 2 * form.ell), (GEN_B, 1)]
            runs += [(GEN_A, 2), (GEN_B, 2)] * (form.ell - 1)
            runs += [(GEN_A, p1 + 2), (GEN_B, q1)]
            for p, q in rest:
                runs += [(GEN_A, p), (GEN_B, q)]
            runs[-1] = (GEN_B, runs[-1][1] + 1)
    elif isinstance(form, GarsideD):
        if form.ell == 0:
            if not form.pairs:
                # both exponent bumps land on the single a-run
                runs = [(GEN_A, form.p_r + 2), (GEN_B, 1)]
            else:
                for p, q in form.pairs:
                    runs += [(GEN_A, p), (GEN_B, q)]
                runs[0] = (GEN_A, runs[0][1] + 1)
                runs += [(GEN_A, form.p_r + 1), (GEN_B, 1)]
        else:
            runs = [(GEN_A, form.p_r + 2), (GEN_B, 1)]
            runs += [(GEN_A, 4), (GEN_B, 1)] * (form.ell - 1)
            runs += [(GEN_A, 3), (GEN_B, 1)]
            if form.pairs:
                (p1, q1), rest = form.pairs[0], form.pairs[1:]
                runs += [(GEN_A, p1 + form.ell + 1), (GEN_B, q1)]
                for p, q in rest:
                    runs += [(GEN_A, p), (GEN_B, q)]
            else:
                runs += [(GEN_A, form.ell + 1)]
    else:
        raise PreconditionError("no witness word for this form")
    return BraidWord.from_runs(runs)


def alternating_distance_genus_bounds(form: GarsideForm) -> AlternatingGenusBounds:
    """Sandwich the cobordism distance to the set of alternating knots.

    Works on positive knot-closure forms.  The upper bound comes from the
    torus-sum cobordism applied to a minimal-switch positive word for the
    same knot; the lower bound is half the (exact) alternation number.
    """
    if isinstance(form, (GarsideB, GarsideC, GarsideD)) and form.ell >= 0:
        witness = _witness_word(form)
    else:
        raise PreconditionError("bounds need a positive-braid form")
    if not witness.is_knot():
        raise PreconditionError("closure is not a knot")
    check, _ = garside_normal_form(witness)
    canonical, _ = garside_normal_form(realize(form))
    if check != canonical:
        raise InternalInconsistencyError(
            f"witness word classifies to {check}, not {canonical}"
        )
    cert = torus_sum_cobordism(witness)
    r = len(_alternating_pairs(cert.start))
    lower = Fraction(r - 1, 2)
    upper = cert.genus
    return AlternatingGenusBounds(
        lower=lower,
        upper=upper,
        lower_knot_bound=-((-lower.numerator) // lower.denominator),
        certificate=cert,
    )
