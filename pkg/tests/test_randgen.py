import random

from delibcheck import black_atoms, modal_args, white_depth
from delibcheck.randgen import (
    random_basis,
    random_black_formula,
    random_framework,
    random_labelling,
    random_white_formula,
)


def test_same_seed_same_output():
    for ctor in (random_framework, random_basis):
        a = ctor(random.Random(99))
        b = ctor(random.Random(99))
        assert a == b


def test_basis_respects_bounds():
    rng = random.Random(100)
    for _ in range(50):
        b = random_basis(rng, max_args=4, max_agents=3)
        assert 1 <= len(b.agents) <= 3
        assert 1 <= len(b.arguments) <= 4
        assert all(n.name.startswith("a") for n in b.arguments)


def test_white_formula_depth_and_atoms_bounded():
    rng = random.Random(101)
    atoms = [a for a in random_basis(rng, max_args=4).arguments]
    for _ in range(100):
        depth_cap = rng.randint(0, 2)
        phi = random_white_formula(rng, sorted(atoms), max_depth=depth_cap)
        assert white_depth(phi) <= depth_cap
        assert black_atoms(phi) <= frozenset(atoms)
        assert modal_args(phi) <= frozenset(atoms)


def test_labelling_in_out_disjoint():
    rng = random.Random(102)
    atoms = sorted(random_basis(rng, max_args=5).arguments)
    for _ in range(50):
        lab = random_labelling(rng, atoms)
        assert not (lab.in_set & lab.out_set)
        assert lab.domain == frozenset(atoms)


def test_black_formula_atoms_come_from_pool():
    rng = random.Random(103)
    atoms = sorted(random_basis(rng, max_args=3).arguments)
    seen = set()
    for _ in range(50):
        alpha = random_black_formula(rng, atoms)
        stack = [alpha]
        while stack:
            node = stack.pop()
            if hasattr(node, "arg"):
                seen.add(node.arg)
            for attr in ("body", "lhs", "rhs"):
                if hasattr(node, attr):
                    stack.append(getattr(node, attr))
    assert seen <= set(atoms)
