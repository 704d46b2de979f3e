"""Matrices, the trace into Gamma+, and the free monad census."""

from dihedra.free_monad import BarLevels, census_increments, mu, random_element
from dihedra.matrix_trace import MatrixElem, enumerate_matrices, mat_bar_operator, trace_q
from dihedra.perm_core import HYPEROCTAHEDRAL, SYMMETRIC, cyclic_group_monoid, monoid_action


def main():
    print("|M_2(X)|, |X| = 2:", len(enumerate_matrices(2, [1])))

    M = cyclic_group_monoid(2)
    A = MatrixElem(2, [(1, 2, 2), (2, 1, 2)])
    B = MatrixElem(2, [(2, 1, 1), (1, 2, 2)])
    print("Tr(A, B) =", trace_q([A, B]))
    print("Tr(t(A, B)) =", trace_q(mat_bar_operator("t", [A, B], M)))

    for P in (SYMMETRIC, HYPEROCTAHEDRAL):
        rows = census_increments(P, 3, 4)
        print(P.name, "census:", [r["census"] for r in rows])

    import random
    rng = random.Random(1)
    act = monoid_action(cyclic_group_monoid(3))
    bar = BarLevels(act)
    x = random_element(SYMMETRIC, act.monoid, 2, rng, 3)
    while x is None or len(x.args) < 2:
        x = random_element(SYMMETRIC, act.monoid, 2, rng, 3)
    print("element of B_1:", x)
    print("d_0 = mu:", mu(x, SYMMETRIC, 2), " d_1 = P(theta):", bar.face(1, 1, x))


if __name__ == "__main__":
    main()
