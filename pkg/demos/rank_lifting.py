#!/usr/bin/env python3
"""Constructive rank lifting over the rationals.

Perturbing a single entry off the certifying submatrix raises the
permanental rank by exactly one.  The enlarged subpermanent is affine in the
perturbation with nonzero slope, so only one value is forbidden; any
polynomial side constraint knocks out at most its degree in further values,
and scanning small positive integers always lands quickly.
"""

import permrank as pr

Q = pr.QQ

# Start from a single matrix unit (rank 1) and force the entry a_{1,1} to
# stay nonzero while lifting.
a = pr.unit(1, 1, 3, Q)
x = pr.lift_rank(a, pr.entry_constraint(1, 1), position=(2, 2))
print("lifted:", x, "rank:", pr.prk(x).rank)

# The default position is the least row/column outside the witness, and the
# scan picks the least admissible positive integer.
y = pr.lift_rank(x, pr.constant_one())
print("lifted again:", y, "rank:", pr.prk(y).rank)

# A full chain from the zero matrix to full rank.
chain = pr.lift_chain(4, 4)
for m in chain:
    w = pr.prk(m)
    print("rank", w.rank, "witness", w.row_set, w.col_set)

# Constraints are black-box polynomials with a degree bound.  Here the
# constraint vanishes when the new entry equals 1, so mu = 1 is skipped and
# the scan settles on 2.
f = pr.PolyConstraint(
    evaluate=lambda m: m.entry(2, 2) - m.field(1), degree=1, label="a22 != 1"
)
z = pr.lift_rank(pr.unit(1, 1, 3, Q), f, position=(2, 2))
print("\nconstraint-aware lift picked a22 =", z.entry(2, 2))

# Keeping a named subpermanent alive across the lift:
base = pr.unit(1, 1, 3, Q) + pr.unit(2, 2, 3, Q)
w = pr.prk(base)
keep = pr.subpermanent_constraint(w.row_set, w.col_set)
lifted = pr.lift_rank(base, keep)
print("witness subpermanent after lift:", keep.evaluate(lifted))

# Finite fields are rejected: over F_p the forbidden values can cover the
# whole field, so the construction genuinely needs an infinite field.
try:
    pr.lift_rank(pr.unit(1, 1, 3, pr.PrimeField(5)), pr.constant_one())
except pr.errors.FieldNotInfinite as exc:
    print("\nfinite field rejected:", exc)
