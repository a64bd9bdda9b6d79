"""
braid3: classify 3-braid words and compute their closure invariants.

Subcommands
  normalize    print the Garside (default) or Murasugi conjugacy normal form
  invariants   full invariant report for one word (text or JSON)
  certify      emit a cobordism certificate (torus-sum or twist construction)
  verify       check two words for equality in B3, or recheck a certificate
  batch        run the invariant pipeline over a name,word CSV file

Exit codes: 0 success, 1 a verification answered false, 2 parse error,
3 precondition failure, 4 internal inconsistency.  The environment
variable BRAID3_MAX_WORD_LEN (default 10^6) bounds accepted input length.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .burau import fingerprint, words_equal
from .cobordism import (
    ClosureFactor,
    CobordismCertificate,
    ConnectedSum,
    PreconditionError,
    SaddleMove,
    TorusFactor,
    torus_sum_cobordism,
    twist_trick,
    verify as verify_cobordism,
)
from .invariants import InvariantReport, IntInterval, NotAKnotError, build_report
from .normal_form import (
    GarsideA,
    GarsideB,
    GarsideC,
    GarsideD,
    InternalInconsistencyError,
    MurasugiGeneric,
    MurasugiHalfTwist,
    MurasugiPower,
    MurasugiTorus,
    form_display,
    garside_normal_form,
    murasugi_normal_form,
)
from .words import ParseError, parse

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _interval_json(iv: IntInterval | None):
    if iv is None:
        return None
    return {"lo": iv.lo, "hi": iv.hi, "exact": iv.exact}


def _form_json(form) -> dict:
    out: dict = {"display": form_display(form)}
    if isinstance(form, GarsideA):
        out.update(case="A", ell=form.ell, p=form.p)
    elif isinstance(form, GarsideB):
        out.update(case="B", ell=form.ell, p=form.p)
    elif isinstance(form, GarsideC):
        out.update(case="C", ell=form.ell, pairs=[list(pq) for pq in form.pairs])
    elif isinstance(form, GarsideD):
        out.update(case="D", ell=form.ell, pairs=[list(pq) for pq in form.pairs], p_r=form.p_r)
    elif isinstance(form, MurasugiPower):
        out.update(case="power", ell=form.ell, p=form.p)
    elif isinstance(form, MurasugiHalfTwist):
        out.update(case="half-twist", ell=form.ell)
    elif isinstance(form, MurasugiTorus):
        out.update(case="torus", ell=form.ell, variant=form.variant)
    elif isinstance(form, MurasugiGeneric):
        out.update(case="generic", ell=form.ell, pairs=[list(pq) for pq in form.pairs])
    return out


def report_json(report: InvariantReport) -> dict:
    return {
        "word": report.word.display(),
        "components": report.components,
        "is_knot": report.is_knot,
        "upsilon": report.upsilon,
        "signature": report.signature,
        "s": report.rasmussen_s,
        "genus3": report.genus3,
        "genus4": report.genus4,
        "tau": report.tau,
        "alt": _interval_json(report.alt),
        "dalt": _interval_json(report.dalt),
        "turaev": _interval_json(report.turaev_genus),
        "minimal_r": report.minimal_r,
        "ballinger_t": report.ballinger_t,
        "fdtc": _frac(report.fdtc),
        "homogenized_upsilon": _frac(report.homogenized_upsilon),
        "gamma4_lower": report.nonorientable_g4_lower,
        "garside_form": _form_json(report.garside),
        "murasugi_form": _form_json(report.murasugi),
        "flags": report.flags,
    }


def _identity_text(form) -> str:
    if isinstance(form, GarsideA) and form.ell == 0 and form.p == 0:
        return "identity (case A, ℓ=0, p=0)"
    if isinstance(form, MurasugiPower) and form.ell == 0 and form.p == 0:
        return "identity (power form, ℓ=0, p=0)"
    return form_display(form)


def cmd_normalize(args) -> int:
    word = parse(args.word)
    if args.form == "murasugi":
        form, cert = murasugi_normal_form(word)
    else:
        form, cert = garside_normal_form(word)
    if args.json:
        payload = {
            "input": word.display(),
            "form": _form_json(form),
        }
        if args.certificate:
            payload["certificate"] = {
                "conjugator": cert.conjugator.display(),
                "source": cert.source.display(),
                "target": cert.target.display(),
                "verified": cert.verify(),
            }
        print(json.dumps(payload))
        return EXIT_OK
    print(_identity_text(form))
    if args.certificate:
        print(f"conjugator: {cert.conjugator.display() or '<identity>'}")
        print(f"verified: {'yes' if cert.verify() else 'NO'}")
    return EXIT_OK


_TEXT_FIELDS = (
    "components", "is_knot", "upsilon", "signature", "s", "genus3", "genus4",
    "tau", "alt", "dalt", "turaev", "minimal_r", "ballinger_t", "gamma4_lower",
    "fdtc", "homogenized_upsilon",
)


def cmd_invariants(args) -> int:
    word = parse(args.word)
    report = build_report(word)
    data = report_json(report)
    if args.json:
        print(json.dumps(data))
        return EXIT_OK
    print(f"word: {word.display() or '<identity>'}")
    print(f"garside: {_identity_text(report.garside)}")
    print(f"murasugi: {_identity_text(report.murasugi)}")
    for key in _TEXT_FIELDS:
        value = data[key]
        if isinstance(value, dict):  # interval
            value = value["lo"] if value["exact"] else f"[{value['lo']}, {value['hi']}]"
        if value is None:
            value = "absent"
        print(f"{key}: {value}")
    return EXIT_OK


def _move_json(m: SaddleMove) -> dict:
    return {"kind": m.kind, "position": m.position, "generator": m.generator}


def _factor_json(f) -> dict:
    if isinstance(f, TorusFactor):
        return {"type": "torus", "q": f.q}
    return {"type": "closure", "word": f.word.display()}


def certificate_json(cert: CobordismCertificate, verified: bool) -> dict:
    return {
        "kind": cert.kind,
        "start": cert.start.display(),
        "end": cert.end.display(),
        "end_factors": [_factor_json(f) for f in cert.end.factors],
        "moves": [_move_json(m) for m in cert.moves],
        "euler_char": cert.euler_char,
        "genus": _frac(cert.genus),
        "verified": verified,
    }


def certificate_from_json(data: dict) -> CobordismCertificate:
    factors = []
    for f in data["end_factors"]:
        if f["type"] == "torus":
            factors.append(TorusFactor(f["q"]))
        else:
            factors.append(ClosureFactor(parse(f["word"])))
    num, den = data["genus"].split("/")
    return CobordismCertificate(
        kind=data["kind"],
        start=parse(data["start"]),
        end=ConnectedSum(tuple(factors)),
        moves=tuple(
            SaddleMove(m["kind"], m["position"], m["generator"]) for m in data["moves"]
        ),
        euler_char=data["euler_char"],
        genus=Fraction(int(num), int(den)),
    )


def cmd_certify(args) -> int:
    word = parse(args.word)
    if args.kind == "torus-sum":
        cert = torus_sum_cobordism(word)
    else:
        cert = twist_trick(word, args.n)
    result = verify_cobordism(cert)
    print(json.dumps(certificate_json(cert, bool(result))))
    return EXIT_OK if result else EXIT_FALSE


def cmd_verify(args) -> int:
    if args.cert:
        with open(args.cert, "r", encoding="utf-8") as fh:
            cert = certificate_from_json(json.load(fh))
        result = verify_cobordism(cert)
        print(json.dumps({"verified": bool(result), "reasons": list(result.reasons)}))
        return EXIT_OK if result else EXIT_FALSE
    if len(args.words) != 2:
        print("verify needs two words or --cert FILE", file=sys.stderr)
        return EXIT_PRECONDITION
    u, v = (parse(w) for w in args.words)
    equal = words_equal(u, v)
    fp = fingerprint(u) == fingerprint(v)
    print(
        json.dumps(
            {"equal_in_b3": equal, "conjugacy_fingerprints_match": fp}
        )
    )
    return EXIT_OK if equal else EXIT_FALSE


def cmd_batch(args) -> int:
    try:
        fh = open(args.csv, "r", encoding="utf-8", newline="")
    except OSError as exc:
        print(f"cannot read {args.csv}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    processed = errors = 0
    try:
        reader = csv.DictReader(fh)
        for row in reader:
            name = (row.get("name") or "").strip()
            text = (row.get("word") or "").strip()
            record: dict = {"name": name, "word": text}
            try:
                if row.get("word") is None:
                    raise ParseError("missing word column", 1)
                report = build_report(parse(text))
                record.update(report_json(report))
            except (ParseError, ValueError) as exc:
                record["error"] = str(exc)
                errors += 1
            processed += 1
            out.write(json.dumps(record) + "\n")
    finally:
        fh.close()
        if args.out:
            out.close()
    print(f"{processed} processed, {errors} errors", file=sys.stderr)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braid3",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="conjugacy normal form of a word")
    p.add_argument("word")
    p.add_argument("--form", choices=("garside", "murasugi"), default="garside")
    p.add_argument("--certificate", action="store_true", help="show the conjugator")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("invariants", help="full invariant report")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("certify", help="emit a cobordism certificate")
    p.add_argument("word")
    p.add_argument("--kind", choices=("torus-sum", "twist"), required=True)
    p.add_argument("--n", type=int, default=1, help="twist count for --kind twist")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="word equality or certificate recheck")
    p.add_argument("words", nargs="*")
    p.add_argument("--cert", help="certificate JSON file to recheck")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="invariants for a name,word CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--out", help="output path (JSON lines); stdout if omitted")
    p.set_defaults(func=cmd_batch)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, NotAKnotError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalInconsistencyError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
