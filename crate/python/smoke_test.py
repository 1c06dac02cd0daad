"""Smoke test for the Python bindings.

Build and run from the repository root:

    cargo build --release -p upbe-py --features extension-module
    cp target/release/libupbe_py.so python/upbe_py.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import upbe_py  # noqa: E402

C4 = "upbe 2\nv v1\nv v2\nv v3\nv v4\ne v1 v2 1\ne v3 v4 1\ne v3 v2 2\ne v4 v1 2\n"


def check_instances():
    inst = upbe_py.Instance.parse(C4)
    assert inst.pages == 2 and len(inst.vertices) == 4
    assert upbe_py.Instance.parse(inst.emit()).emit() == inst.emit()
    assert inst.is_matching_partition()
    order = inst.solve_exact()
    assert order == ["v3", "v4", "v1", "v2"], order
    assert inst.is_valid(order)
    assert inst.solve_umpbe2() is not None
    assert inst.violations(["v1", "v3", "v2", "v4"])

    try:
        upbe_py.Instance(1, ["a", "b"], [("a", "b", 1), ("b", "a", 1)])
    except ValueError:
        pass
    else:
        raise AssertionError("a cycle must be rejected")

    svg = inst.render_svg(order)
    assert svg.count('class="arc"') == 4 and svg.count('class="dot"') == 4
    assert svg == inst.render_svg(order)


def check_folding():
    assert upbe_py.fold_path("MM") == ["f2", "f3", "f1"]
    assert upbe_py.fold_cycle("MMMM") is None
    assert upbe_py.fold_cycle("MMMV") is not None


def check_reductions():
    bw = upbe_py.Betweenness(["a", "b", "c", "d"], [("a", "b", "c"), ("b", "c", "d"), ("d", "b", "a")])
    phi = bw.solve_bruteforce()
    assert phi is not None and bw.satisfies(phi)
    for reduce, witness in [(bw.reduce_upbe3, bw.witness_upbe3), (bw.reduce_umpbe4, bw.witness_umpbe4)]:
        inst, roles = reduce()
        assert len(roles) == len(inst.vertices)
        assert inst.is_valid(witness(phi))
    inst, _ = bw.reduce_upbe3()
    assert len(inst.vertices) == 128
    try:
        inst.solve_exact(node_budget=5)
    except upbe_py.BudgetExhausted:
        pass
    else:
        raise AssertionError("a tiny budget must run out")


def check_generators():
    path = upbe_py.random_path(1000, 2, seed=3)
    assert path.emit() == upbe_py.random_path(1000, 2, seed=3).emit()
    order = path.solve_umpbe2()
    assert order is not None and path.is_valid(order)


if __name__ == "__main__":
    check_instances()
    check_folding()
    check_reductions()
    check_generators()
    print("smoke test passed")
