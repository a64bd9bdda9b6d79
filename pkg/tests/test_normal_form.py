import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braid3.burau import conjugates_to, fingerprint, words_equal
from braid3.normal_form import (
    GarsideA,
    GarsideB,
    GarsideC,
    GarsideD,
    MurasugiGeneric,
    MurasugiHalfTwist,
    MurasugiPower,
    MurasugiTorus,
    delta_positive_split,
    form_display,
    garside_normal_form,
    murasugi_normal_form,
    realize,
)
from braid3.words import BraidWord, delta_power, parse

from conftest import LETTER_RUNS, random_word, reduced_words

word_strategy = st.lists(st.sampled_from(LETTER_RUNS), max_size=14).map(
    BraidWord.from_runs
)


class TestDeltaPositiveSplit:
    def test_positive_input_untouched(self):
        w = parse("a^2 b^3 a")
        split = delta_positive_split(w)
        assert split.k == 0 and split.positive_part == w
        assert split.verify()

    def test_single_inverse_letter(self):
        split = delta_positive_split(parse("A"))
        assert split.k == -1
        assert split.positive_part == parse("babab")
        assert split.verify()

    def test_mixed_word(self):
        # five inverse letters, one half-twist pair each
        split = delta_positive_split(parse("a^3 B a^-3 B"))
        assert split.k == -5
        assert split.positive_part.writhe() == 28
        assert all(s.exp > 0 for s in split.positive_part)
        assert split.verify()


class TestGarsideExamples:
    def test_torus_word(self):
        form, cert = garside_normal_form(parse("abababab"))
        assert form == GarsideB(ell=1, p=1)
        assert cert.verify()

    def test_eight_twenty(self):
        form, _ = garside_normal_form(parse("a^3 B a^-3 B"))
        assert form == GarsideD(ell=-2, pairs=(), p_r=7)
        assert form_display(form) == "D^-3 a^7"

    def test_eight_twenty_one(self):
        form, _ = garside_normal_form(parse("a^3 b A^2 b^2"))
        assert form == GarsideC(ell=-1, pairs=((3, 2), (2, 3)))
        assert form_display(form) == "D^-2 a^3 b^2 a^2 b^3"

    def test_half_twist_word(self):
        form, _ = garside_normal_form(parse("aba"))
        assert form == GarsideB(ell=0, p=2)

    def test_identity(self):
        form, _ = garside_normal_form(BraidWord())
        assert form == GarsideA(ell=0, p=0)

    def test_central_power_is_case_a(self):
        form, _ = garside_normal_form(delta_power(-4))
        assert form == GarsideA(ell=-2, p=0)

    def test_form_constructors_enforce_invariants(self):
        with pytest.raises(ValueError):
            GarsideA(0, -1)
        with pytest.raises(ValueError):
            GarsideB(0, 4)
        with pytest.raises(ValueError):
            GarsideC(0, ((1, 2),))
        with pytest.raises(ValueError):
            GarsideD(0, ((2, 2),), 1)
        with pytest.raises(ValueError):
            MurasugiGeneric(0, ())


class TestRealize:
    def test_examples(self):
        assert realize(GarsideC(0, ((3, 3),))) == parse("a^3 b^3")
        assert realize(GarsideA(1, 0)) == delta_power(2)
        assert realize(MurasugiGeneric(1, ((1, 1), (3, 1)))) == parse("D^2 A b A^3 b")

    def test_idempotence_on_canonical_forms(self, rng):
        # canonical = whatever the classifier itself emits
        seen = 0
        while seen < 200:
            form = _random_garside_form(rng)
            canonical, _ = garside_normal_form(realize(form))
            again, cert = garside_normal_form(realize(canonical))
            assert again == canonical, form
            assert cert.verify()
            seen += 1


def _random_garside_form(rng: random.Random):
    kind = rng.randrange(4)
    ell = rng.randint(-3, 3)
    if kind == 0:
        return GarsideA(ell, rng.randint(0, 6))
    if kind == 1:
        return GarsideB(ell, rng.choice((1, 2, 3)))
    r = rng.randint(1, 3)
    pairs = tuple(
        (rng.randint(2, 6), rng.randint(2, 6)) for _ in range(r)
    )
    if kind == 2:
        return GarsideC(ell, pairs)
    return GarsideD(ell, pairs[:-1], pairs[-1][0])


class TestSoundness:
    def test_exhaustive_short_words(self):
        for w in reduced_words(6):
            gform, gcert = garside_normal_form(w)
            assert gcert.verify()
            assert fingerprint(w) == fingerprint(realize(gform))

    def test_random_long_words(self, rng):
        for _ in range(150):
            w = random_word(rng, rng.randrange(0, 41))
            gform, gcert = garside_normal_form(w)
            mform, mcert = murasugi_normal_form(w)
            assert gcert.verify() and mcert.verify()
            # the two normal forms are conjugate to each other, with the
            # explicit conjugator inherited from the two certificates
            rel = mcert.conjugator * gcert.conjugator.inverse()
            assert conjugates_to(rel, realize(gform), realize(mform))

    def test_certificate_literal_definition(self, rng):
        for _ in range(20):
            w = random_word(rng, rng.randrange(0, 15))
            _, cert = garside_normal_form(w)
            c = cert.conjugator
            assert words_equal(c * cert.source * c.inverse(), cert.target)

    def test_conjugation_invariance(self, rng):
        for _ in range(200):
            w = random_word(rng, rng.randrange(0, 14))
            u = random_word(rng, rng.randrange(0, 8))
            f1, _ = garside_normal_form(w)
            f2, _ = garside_normal_form(u * w * u.inverse())
            assert f1 == f2

    @given(word_strategy, word_strategy)
    @settings(max_examples=150, deadline=None)
    def test_conjugation_invariance_property(self, w, u):
        f1, cert = garside_normal_form(w)
        assert cert.verify()
        f2, _ = garside_normal_form(u * w * u.inverse())
        assert f1 == f2

    def test_knot_parity_constraints(self):
        for w in reduced_words(6):
            form, _ = garside_normal_form(w)
            if not w.is_knot():
                continue
            assert not isinstance(form, GarsideA)
            if isinstance(form, GarsideB):
                assert form.p % 2 == 1
            elif isinstance(form, GarsideC):
                assert any(p % 2 for p, _ in form.pairs)
                assert any(q % 2 for _, q in form.pairs)
            else:
                exps = [x for pq in form.pairs for x in pq] + [form.p_r]
                assert any(e % 2 for e in exps)


class TestMurasugi:
    def test_eight_twenty_one_conversion(self):
        form, cert = murasugi_normal_form(parse("a^3 b A^2 b^2"))
        assert form == MurasugiGeneric(ell=1, pairs=((1, 1), (3, 1)))
        assert form_display(form) == "D^2 A b A^3 b"
        assert cert.verify()

    def test_eight_twenty_conversion(self):
        form, _ = murasugi_normal_form(parse("a^3 B a^-3 B"))
        assert form == MurasugiGeneric(ell=-1, pairs=((1, 5),))

    def test_torus_cases(self):
        assert murasugi_normal_form(parse("abababab"))[0] == MurasugiTorus(1, "ab")
        assert murasugi_normal_form(parse("a^3 b"))[0] == MurasugiTorus(0, "abab")
        assert murasugi_normal_form(parse("aba"))[0] == MurasugiHalfTwist(0)
        assert murasugi_normal_form(parse("a^4"))[0] == MurasugiPower(0, 4)

    def test_all_exponents_two_degenerates_to_power(self):
        form, cert = murasugi_normal_form(parse("a^2 b^2"))
        assert form == MurasugiPower(1, -2)
        assert cert.verify()
        form, cert = murasugi_normal_form(realize(GarsideD(0, ((2, 2),), 2)))
        assert form == MurasugiPower(2, -3)
        assert cert.verify()

    def test_trailing_vanishing_runs_wrap_around(self):
        # conversion slots ending in zeros force a cyclic rotation before
        # the empty b-runs merge; both orders hand-computed
        form, cert = murasugi_normal_form(realize(GarsideC(0, ((3, 3), (2, 2)))))
        assert form == MurasugiGeneric(2, ((1, 1), (3, 1)))
        assert cert.verify()
        form, cert = murasugi_normal_form(realize(GarsideC(0, ((2, 3), (3, 2)))))
        assert form == MurasugiGeneric(2, ((1, 1), (3, 1)))
        assert cert.verify()

    def test_conversion_certified_on_random_forms(self, rng):
        for _ in range(150):
            kind = rng.randrange(2)
            ell = rng.randint(-3, 3)
            r = rng.randint(1, 3)
            pairs = tuple((rng.randint(2, 5), rng.randint(2, 5)) for _ in range(r))
            form = GarsideC(ell, pairs) if kind == 0 else GarsideD(ell, pairs[:-1], pairs[-1][0])
            mform, cert = murasugi_normal_form(realize(form))
            assert cert.verify()
            assert fingerprint(realize(form)) == fingerprint(realize(mform))

    def test_generic_exponent_constraints(self, rng):
        for _ in range(100):
            w = random_word(rng, rng.randrange(0, 16))
            form, _ = murasugi_normal_form(w)
            if isinstance(form, MurasugiGeneric):
                assert all(p >= 1 and q >= 1 for p, q in form.pairs)


class TestCanonicalRotation:
    def test_rotations_classify_identically(self, rng):
        for _ in range(60):
            r = rng.randint(2, 3)
            pairs = [(rng.randint(2, 5), rng.randint(2, 5)) for _ in range(r)]
            base = GarsideC(0, tuple(pairs))
            expected, _ = garside_normal_form(realize(base))
            for shift in range(1, r):
                rotated = GarsideC(0, tuple(pairs[shift:] + pairs[:shift]))
                got, _ = garside_normal_form(realize(rotated))
                assert got == expected

    def test_swapped_generators_classify_identically(self, rng):
        for _ in range(60):
            w = random_word(rng, rng.randrange(0, 12))
            f1, _ = garside_normal_form(w)
            f2, _ = garside_normal_form(w.swap_generators())
            # conjugation by the half twist exchanges the generators
            assert f1 == f2


class TestMirrorTorusFamily:
    def test_mirrored_torus_words_land_in_complementary_class(self):
        # the mirror of the D^(2l) ab class sits in the D^(2l') a^3 b class
        # with l' = -l - 1, and vice versa
        for ell in range(0, 4):
            word = realize(GarsideB(ell, 1)).mirror()
            assert garside_normal_form(word)[0] == GarsideB(-ell - 1, 3)
            word = realize(GarsideB(ell, 3)).mirror()
            assert garside_normal_form(word)[0] == GarsideB(-ell - 1, 1)
