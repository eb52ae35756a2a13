import itertools
import json
import random
from fractions import Fraction

import pytest

from _oracles import invariant_dim
from horncone.cone import (
    InequalitySystem,
    SpectrumFamily,
    generate_system,
    lr_membership,
    member,
    shift_rescale,
)
from horncone.horn import NotSigmaStable
from horncone.subsets import Permutation, all_tuples, expected_dim, schubert_partitions


def fam(spectra, t=0):
    return SpectrumFamily(spectra, t)


def random_family(rng, r, s=3, denom=6, span=12):
    spectra = []
    for _ in range(s):
        vals = sorted(
            (Fraction(rng.randint(-span, span), rng.randint(1, denom))
             for _ in range(r)),
            reverse=True,
        )
        spectra.append(vals)
    t = Fraction(rng.randint(-span, span), rng.randint(1, denom))
    return SpectrumFamily(spectra, t)


def random_trace_matched(rng, r, s=3):
    """Random decreasing spectra with t forced onto the trace hyperplane."""
    spectra = []
    for _ in range(s):
        vals = sorted(
            (Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(r)),
            reverse=True,
        )
        spectra.append(vals)
    total = sum(sum(spec) for spec in spectra)
    return SpectrumFamily(spectra, Fraction(total, r))


class TestSpectrumFamily:
    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            SpectrumFamily([[0.5, 0.0]], 0)

    def test_chamber_violations_reported_not_raised(self):
        f = fam([[0, 1], [1, 0], [2, -3]])
        assert f.chamber_violations() == [(1, 1)]

    def test_json_roundtrip(self):
        f = fam([[Fraction(1, 2), Fraction(-1, 3)], [1, 0], [0, 0]], Fraction(7, 6))
        data = json.loads(json.dumps(f.to_json()))
        assert SpectrumFamily.from_json(data) == f
        assert data["spectra"][0] == ["1/2", "-1/3"]
        assert data["t"] == "7/6"

    def test_stability(self):
        sigma = Permutation.from_cycle_type((3,))
        assert fam([[1, 0]] * 3).is_stable(sigma)
        assert not fam([[1, 0], [1, 0], [2, 0]]).is_stable(sigma)


class TestGenerateSystem:
    def test_published_counts(self, store):
        assert [generate_system(r, 3, None, "full0", store).count
                for r in range(1, 7)] == [2, 8, 20, 52, 156, 539]
        assert [generate_system(r, 3, (3,), "full0", store).count
                for r in range(1, 7)] == [2, 3, 4, 7, 10, 10]
        assert [generate_system(r, 3, None, "min00", store).count
                for r in range(1, 7)] == [2, 5, 20, 52, 156, 538]
        assert [generate_system(r, 3, (3,), "min00", store).count
                for r in range(1, 7)] == [2, 3, 4, 7, 10, 9]

    def test_rank_one_is_trace_only(self, store):
        system = generate_system(1, 3, None, "full0", store)
        assert system.count == 2 and not system.horn

    def test_canonical_row_order(self, store):
        system = generate_system(3, 3, None, "full0", store)
        kinds = [c.kind for c in system.constraints()]
        assert kinds[:2] == ["trace_le", "trace_ge"]
        assert kinds[2:8] == ["chamber"] * 6
        assert all(k == "horn" for k in kinds[8:])
        ds = [c.meta.d for c in system.constraints() if c.kind == "horn"]
        assert ds == sorted(ds)

    def test_level_all_contains_level_full0(self, store):
        full0 = generate_system(4, 3, None, "full0", store)
        every = generate_system(4, 3, None, "all", store)
        assert set(r.tup for r in full0.horn) <= set(r.tup for r in every.horn)

    def test_bad_level(self, store):
        with pytest.raises(ValueError):
            generate_system(2, 3, None, "everything", store)

    def test_sigma_partition_check(self, store):
        with pytest.raises(ValueError):
            generate_system(2, 3, (2, 2), "full0", store)

    def test_json_roundtrip(self, store):
        system = generate_system(4, 3, (3,), "full0", store)
        back = InequalitySystem.from_json(json.loads(json.dumps(system.to_json())))
        assert back.count == system.count
        assert [r.tup for r in back.horn] == [r.tup for r in system.horn]
        assert [r.is_point for r in back.horn] == [r.is_point for r in system.horn]

    def test_csv_shape(self, store):
        system = generate_system(2, 3, None, "full0", store)
        lines = system.to_csv().strip().split("\n")
        assert len(lines) == 1 + system.count
        assert lines[0].startswith("kind,d,tuple,L1[1]")


class TestMember:
    def test_member_example(self, store):
        system = generate_system(2, 3, None, "full0", store)
        assert member(fam([[1, -1]] * 3), system).is_member

    def test_not_member_with_canonical_witness(self, store):
        system = generate_system(3, 3, None, "full0", store)
        verdict = member(fam([[0, 0, 0], [0, 0, 0], [1, 0, -1]]), system)
        assert not verdict.is_member
        con = verdict.violation.constraint
        assert con.kind == "horn"
        assert con.meta.d == 1
        assert [list(p.elements) for p in con.meta.tup.parts] == [[3], [3], [1]]

    def test_sigma_system_on_printed_rank5_solution(self, store):
        lam = [1, 1, 0, -1, -1]
        system = generate_system(5, 3, (3,), "full0", store)
        assert member(fam([lam] * 3), system).is_member

    def test_sigma_system_rejects_unstable_input(self, store):
        system = generate_system(2, 3, (3,), "full0", store)
        with pytest.raises(NotSigmaStable):
            member(fam([[1, 0], [1, 0], [2, -1]], 1), system)

    def test_chamber_violation_detected(self, store):
        system = generate_system(2, 3, None, "full0", store)
        verdict = member(fam([[0, 1], [0, 0], [0, 0]], Fraction(1, 2)), system)
        assert not verdict.is_member
        assert verdict.violation.constraint.kind == "chamber"

    def test_trace_violation_detected(self, store):
        system = generate_system(2, 3, None, "full0", store)
        verdict = member(fam([[0, 0]] * 3, 1), system)
        assert not verdict.is_member
        assert verdict.violation.constraint.kind in ("trace_le", "trace_ge")

    def test_shape_mismatch(self, store):
        system = generate_system(2, 3, None, "full0", store)
        with pytest.raises(ValueError):
            member(fam([[1, 0, 0]] * 3), system)

    def test_min00_equals_full0_on_random_points(self, store):
        rng = random.Random(41)
        for r in range(2, 7):
            full = generate_system(r, 3, None, "full0", store)
            reduced = generate_system(r, 3, None, "min00", store)
            for _ in range(300 if r <= 4 else 80):
                p = random_trace_matched(rng, r)
                assert member(p, full).is_member == member(p, reduced).is_member

    def test_level_all_decides_like_full0(self, store):
        # rows for every intersecting tuple are valid, just redundant
        rng = random.Random(79)
        full = generate_system(3, 3, None, "full0", store)
        every = generate_system(3, 3, None, "all", store)
        for _ in range(300):
            p = random_trace_matched(rng, 3)
            assert member(p, full).is_member == member(p, every).is_member

    def test_min00_rank2_rejects_unsorted_spectra(self, store):
        # the reduced rank-2 system carries no chamber rows, yet an
        # increasing spectrum still fails: trace plus Horn imply ordering
        reduced = generate_system(2, 3, None, "min00", store)
        p = fam([[0, 1], [0, 0], [0, 0]], Fraction(1, 2))
        assert not member(p, reduced).is_member

    def test_sigma_system_agrees_with_full_on_stable_points(self, store):
        rng = random.Random(43)
        for r in (2, 3, 5):
            full = generate_system(r, 3, None, "full0", store)
            sym = generate_system(r, 3, (3,), "full0", store)
            for _ in range(200):
                spec = sorted(
                    (Fraction(rng.randint(-12, 12), rng.randint(1, 5))
                     for _ in range(r)),
                    reverse=True,
                )
                t = Fraction(3 * sum(spec), r) if rng.random() < 0.8 else \
                    Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                p = fam([spec] * 3, t)
                assert member(p, full).is_member == member(p, sym).is_member

    def test_coordinate_permutation_invariance(self, store):
        rng = random.Random(47)
        system = generate_system(3, 3, None, "full0", store)
        perms = [Permutation(p) for p in itertools.permutations((1, 2, 3))]
        for _ in range(150):
            p = random_trace_matched(rng, 3)
            base = member(p, system).is_member
            for perm in perms:
                assert member(p.permuted(perm), system).is_member == base


class TestShiftRescale:
    def test_identity(self):
        p = fam([[1, -1]] * 3)
        assert shift_rescale(p, [0, 0, 0], 1) == p

    def test_example(self):
        p = fam([[1, -1]] * 3)
        q = shift_rescale(p, [1, 0, 0], 1)
        assert q.spectra[0] == (2, 0)
        assert q.spectra[1] == (1, -1)
        assert q.t == 1

    def test_positive_scale_required(self):
        with pytest.raises(ValueError):
            shift_rescale(fam([[1, -1]] * 3), [0, 0, 0], 0)

    def test_membership_invariance(self, store):
        rng = random.Random(53)
        system = generate_system(3, 3, None, "full0", store)
        for _ in range(300):
            p = random_trace_matched(rng, 3)
            taus = [Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(3)]
            c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            q = shift_rescale(p, taus, c)
            assert member(p, system).is_member == member(q, system).is_member


class TestLrMembership:
    def test_zero_weights(self, store):
        assert lr_membership([[0, 0, 0]] * 3, store)

    def test_adjoint_triple(self, store):
        assert lr_membership([[1, 0, -1]] * 3, store)

    def test_nonzero_trace_fails(self, store):
        assert not lr_membership([[1, 0, 0]] * 3, store)

    def test_requires_decreasing(self, store):
        with pytest.raises(ValueError):
            lr_membership([[0, 1, 0]] * 3, store)

    def test_against_invariant_dimension_oracle(self, store):
        rng = random.Random(59)
        checked = 0
        for _ in range(120):
            r = rng.randint(1, 3)
            lams = []
            for _ in range(2):
                lams.append(sorted((rng.randint(-2, 2) for _ in range(r)),
                                   reverse=True))
            # close the trace on the last weight when possible
            base = sorted((rng.randint(-2, 2) for _ in range(r)), reverse=True)
            deficit = sum(sum(l) for l in lams) + sum(base)
            if deficit % r:
                continue
            last = [x - deficit // r for x in base]
            lams.append(last)
            want = invariant_dim([tuple(l) for l in lams]) > 0
            assert lr_membership(lams, store) == want
            checked += 1
        assert checked > 50


class TestOtherArities:
    def test_two_summand_cone_is_complementarity(self):
        # A + B = t*I forces B = t*I - A, so a pair of spectra is a
        # member exactly when the second is t minus the reverse of the
        # first
        rng = random.Random(71)
        system = generate_system(3, s=2)
        for _ in range(200):
            lam = sorted((Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                          for _ in range(3)), reverse=True)
            t = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            comp = [t - x for x in reversed(lam)]
            assert member(SpectrumFamily([lam, comp], t), system).is_member
            bent = list(comp)
            bent[-1] -= 1
            verdict = member(SpectrumFamily([lam, bent], t), system)
            assert not verdict.is_member

    def test_mixed_cycle_type_system(self, store):
        # families with the last two spectra equal: the (1,2)-restricted
        # system agrees with the full one on such points
        rng = random.Random(73)
        mixed_store = type(store)(arity=3)
        full = generate_system(3, 3, None, "full0", mixed_store)
        part = generate_system(3, 3, (1, 2), "full0", mixed_store)
        assert part.chamber_count == 2 * 2
        for _ in range(200):
            a = sorted((Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                        for _ in range(3)), reverse=True)
            b = sorted((Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                        for _ in range(3)), reverse=True)
            t = Fraction(sum(a) + 2 * sum(b), 3)
            p = SpectrumFamily([a, b, b], t)
            assert member(p, full).is_member == member(p, part).is_member


class TestInductiveBridge:
    def test_zero_dim_members_match_cone_points(self, store):
        # a tuple sits in the zero-dimensional intersecting level exactly
        # when its partition family, paired with the codimension scalar,
        # is a cone point
        for (r, n) in [(1, 3), (2, 4), (2, 5), (3, 5)]:
            system = generate_system(r, 3, None, "full0", store)
            table = store.table(r, n)
            for tup in all_tuples(r, n, 3):
                gam = schubert_partitions(tup)
                point = SpectrumFamily([list(g) for g in gam], n - r)
                in_cone = member(point, system).is_member
                is_zero_dim = tup in table and expected_dim(tup) == 0
                assert in_cone == is_zero_dim
