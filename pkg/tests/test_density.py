import random

import pytest

from permrank import (
    PolyConstraint,
    constant_one,
    entry_constraint,
    identity,
    lift_chain,
    lift_rank,
    mat,
    per_fast,
    prk,
    subpermanent_constraint,
    unit,
    zero_matrix,
)
from permrank.errors import (
    ConstraintVanishesAtA,
    FieldNotInfinite,
    InvalidRange,
    PositionInsideWitness,
)
from permrank.sampling import sample_bounded_prk


class TestLiftRank:
    def test_unit_to_diagonal(self, Q):
        # witness of E_{1,1} is ({1},{1}); the grown subpermanent is
        # per(diag(1, mu)) = mu, so mu = 0 is skipped and mu = 1 works
        a = unit(1, 1, 3, Q)
        x = lift_rank(a, entry_constraint(1, 1), (2, 2))
        assert x == unit(1, 1, 3, Q) + unit(2, 2, 3, Q)
        assert prk(x).rank == 2
        assert x.entry(1, 1) == Q(1)

    def test_grown_subpermanent_is_linear_by_hand(self, Q):
        # direct evaluation of per([[1, 0], [0, mu]]) at a few points
        for mu in (0, 1, 5):
            m = mat([[1, 0], [0, mu]], Q)
            assert per_fast(m) == Q(mu)

    def test_zero_matrix_lift(self, Q):
        x = lift_rank(zero_matrix(3, Q), constant_one())
        assert prk(x).rank == 1
        # default position: least indices outside the empty witness
        assert x == unit(1, 1, 3, Q)

    def test_chain_reaches_target(self, Q):
        chain = lift_chain(3, 3)
        assert [prk(m).rank for m in chain] == [0, 1, 2, 3]
        chain4 = lift_chain(4, 2)
        assert [prk(m).rank for m in chain4] == [0, 1, 2]

    def test_constraint_stays_nonzero_along_chain(self, Q):
        constraint = entry_constraint(1, 1)
        current = unit(1, 1, 4, Q)
        for _ in range(3):
            current = lift_rank(current, constraint)
            assert not constraint.evaluate(current).is_zero

    def test_scan_skips_constraint_roots(self, Q):
        # f vanishes when the perturbed entry equals 1, so mu = 1 is skipped
        a = unit(1, 1, 3, Q)
        f = PolyConstraint(
            evaluate=lambda m: m.entry(2, 2) - m.field(1), degree=1, label="shifted"
        )
        x = lift_rank(a, f, (2, 2))
        assert x.entry(2, 2) == Q(2)
        assert prk(x).rank == 2

    def test_subpermanent_constraint(self, Q):
        a = unit(1, 1, 3, Q) + unit(2, 2, 3, Q)
        w = prk(a)
        f = subpermanent_constraint(w.row_set, w.col_set)
        x = lift_rank(a, f)
        assert prk(x).rank == 3
        assert not f.evaluate(x).is_zero

    def test_never_overshoots(self, Q):
        rng = random.Random(0)
        for trial in range(30):
            n = 3 + trial % 2
            k = rng.randint(0, n - 1)
            a = sample_bounded_prk(rng, n, k, Q)
            r = prk(a).rank
            x = lift_rank(a, constant_one())
            assert prk(x).rank == r + 1


class TestErrors:
    def test_finite_field_rejected(self, F3):
        with pytest.raises(FieldNotInfinite):
            lift_rank(unit(1, 1, 3, F3), constant_one())

    def test_position_inside_witness(self, Q):
        a = unit(1, 1, 3, Q)
        with pytest.raises(PositionInsideWitness):
            lift_rank(a, constant_one(), (1, 2))
        with pytest.raises(PositionInsideWitness):
            lift_rank(a, constant_one(), (2, 1))

    def test_constraint_vanishing_at_start(self, Q):
        a = unit(1, 1, 3, Q)
        with pytest.raises(ConstraintVanishesAtA):
            lift_rank(a, entry_constraint(2, 2))

    def test_full_rank_cannot_lift(self, Q):
        with pytest.raises(InvalidRange):
            lift_rank(identity(3, Q), constant_one())

    def test_chain_range(self):
        with pytest.raises(InvalidRange):
            lift_chain(3, 4)


class TestConstraints:
    def test_entry_constraint(self, Q):
        f = entry_constraint(2, 3)
        assert f.degree == 1
        assert f.evaluate(unit(2, 3, 3, Q)) == Q(1)

    def test_constant_one(self, F3):
        f = constant_one()
        assert f.degree == 0
        assert f.evaluate(zero_matrix(2, F3)) == F3(1)

    def test_subpermanent_labels_and_degree(self, Q):
        f = subpermanent_constraint((1, 2), (2, 3))
        assert f.degree == 2
        assert f.label == "perminor:1,2:2,3"
        m = mat([[0, 1, 1], [0, 1, 1], [0, 0, 0]], Q)
        assert f.evaluate(m) == Q(2)
