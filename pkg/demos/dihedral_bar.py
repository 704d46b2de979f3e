"""Nondegenerate cells of G_., the cyclic bar of a group and its homology."""

from dihedra.bar_thh import build_bar, diagonal_map, homology_table
from dihedra.crossed_simplicial import census_counts, components_and_euler, enumerate_G
from dihedra.perm_core import cyclic_group_monoid, trivial_monoid


def main():
    for flavor, r in (("dT", 1), ("dC", 3), ("dD", 2)):
        table = enumerate_G(flavor, r, 3)
        comps, euler = components_and_euler(table)
        print(f"{flavor} r={r}: counts {census_counts(table)}, {comps} components, chi={euler}")

    for M in (trivial_monoid(), cyclic_group_monoid(2), cyclic_group_monoid(3)):
        X = build_bar(M, 4)
        rows = homology_table(X, 3)
        text = ", ".join(f"H{n}=Z^{f}" + "".join(f"+Z/{t}" for t in tors)
                         for n, (f, tors) in enumerate(rows))
        print(f"{M.name}: {text}")
    print("reduced, trivial monoid:", homology_table(build_bar(trivial_monoid(), 4), 3, augmented=True))

    x = (1, 2, 3)
    print("diagonal of", x, "for r=2:", diagonal_map(x, 2))


if __name__ == "__main__":
    main()
