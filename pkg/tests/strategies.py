import random
from itertools import product

from hypothesis import strategies as st

from superlogic.algebra import CLASSICAL, N, ONE, VALUES, ZERO, SuperValue, formal_sum, n_shift
from superlogic.formula import (
    And,
    Atom,
    Const,
    Not,
    NShift,
    Or,
    Sum,
    atoms,
    canonicalize,
    compile_formula,
    is_pure,
    soul_atom,
    truth_vector,
)

ATOM_NAMES = ("a", "b", "c", "d")
_BINARY = (And, Or, Sum)
_UNARY = (Not, NShift)


def formulas(max_leaves=24):
    leaves = st.one_of(
        st.sampled_from(ATOM_NAMES).map(Atom),
        st.sampled_from([ZERO, ONE, N]).map(Const),
    )
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.builds(Not, kids),
            st.builds(NShift, kids),
            st.builds(And, kids, kids),
            st.builds(Or, kids, kids),
            st.builds(Sum, kids, kids),
        ),
        max_leaves=max_leaves,
    )


def depth(f):
    if isinstance(f, (Atom, Const)):
        return 0
    if isinstance(f, _UNARY):
        return 1 + depth(f.arg)
    return 1 + max(depth(f.left), depth(f.right))


def random_formula(rng: random.Random, max_depth=6):
    """Seeded generator used where a fixed sample size is required."""
    if max_depth == 0 or rng.random() < 0.2:
        if rng.random() < 0.8:
            return Atom(rng.choice(ATOM_NAMES))
        return Const(rng.choice([ZERO, ONE, N]))
    kind = rng.choice(_UNARY + _BINARY)
    if kind in _UNARY:
        return kind(random_formula(rng, max_depth - 1))
    return kind(random_formula(rng, max_depth - 1), random_formula(rng, max_depth - 1))


def assert_canonical_sound(f, sem):
    """Check p + n*q against direct evaluation on classical and on four-valued atoms."""
    names = atoms(f)
    # atoms as classical propositions
    pair = canonicalize(f, sem)
    assert is_pure(pair.p) and is_pure(pair.q)
    pv, qv = truth_vector(pair.p, names), truth_vector(pair.q, names)
    fn = compile_formula(f, names, sem)
    for r, row in enumerate(product(CLASSICAL, repeat=len(names))):
        shift = r
        p_val = SuperValue.of((pv >> shift) & 1, 0)
        q_val = SuperValue.of((qv >> shift) & 1, 0)
        assert fn(row) == formal_sum(p_val, n_shift(q_val), sem)
    # atoms over all four values
    pair = canonicalize(f, sem, split_atoms=True)
    split_names = [x for name in names for x in (name, soul_atom(name))]
    pv, qv = truth_vector(pair.p, split_names), truth_vector(pair.q, split_names)
    for row in product(VALUES, repeat=len(names)):
        r = 0
        for x in row:
            r = (r << 2) | (x.body << 1) | x.soul
        shift = r
        assert fn(row) == SuperValue.of((pv >> shift) & 1, (qv >> shift) & 1)
