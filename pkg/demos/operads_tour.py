"""Walk through operad compositions, signed permutations and D-words."""

from dihedra.dn_words import (
    DnOperadElement, default_context, default_loop_model, dn_algebra_action, dn_pair_circ_i,
    identity_word, normalize, to_hyperoctahedral,
)
from dihedra.perm_core import (
    HYPEROCTAHEDRAL, Permutation, SignedPerm, cyclic_group_monoid, monoid_action,
    perm_compose_i,
)


def main():
    rho, ups = Permutation([2, 4, 1, 3]), Permutation([3, 2, 1])
    print("rho o_1 upsilon =", list(perm_compose_i(rho, ups, 1).images))

    a = SignedPerm((1, -1), (2, 1))
    b = SignedPerm((-1, 1), (1, 2))
    c = HYPEROCTAHEDRAL.compose(a, b, 2)
    print("signed composition:", c)
    print(c.to_matrix())

    M = cyclic_group_monoid(3)
    act = monoid_action(M)
    print("theta([2,1]; g, g^2) =", act(Permutation([2, 1]), (2, 3)))

    ctx = default_context(2)
    raw = [("V", "a", 1), ("V", "b", 2), ("V", "a", 1), ("V", "c", 2), ("V", "c", 2)]
    print("normal form of", raw, "->", normalize(raw, ctx))

    x = DnOperadElement(normalize([("V", "c", 1), ("V", "a", 1)], default_context(1)),
                        Permutation.identity(1))
    y = DnOperadElement(identity_word(default_context(2, "W")), Permutation([2, 1]))
    xy = dn_pair_circ_i(x, y, 1)
    print("x o_1 y =", xy, " signed image:", to_hyperoctahedral(xy))

    # the composite against the two-stage evaluation on the S_3 loop model
    model = default_loop_model()
    gs, v = (4, 1), 1
    inner, _ = dn_algebra_action(y, 0, gs, model)
    two_stage = dn_algebra_action(x, v, (inner,), model)
    composite = dn_algebra_action(xy, {"V": v, "W": 0}, gs, model)
    print("two-stage:", two_stage, " composite:", (composite[0], composite[1]["V"]))


if __name__ == "__main__":
    main()
