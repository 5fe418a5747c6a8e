from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True)
class JointCounts:
    """
    Census of one graph (or a sum of censuses).

    N[(l, k)]: loopless vertices with degree l and second degree k
    P[(l, k)]: looped vertices with degree l and second degree k
    degree_hist[d]: vertices with degree d
    secdeg_hist[k]: vertices with second degree k, i.e. X_n(k)

    Only occupied cells are stored.
    """

    n: int
    N: dict[tuple[int, int], int] = field(default_factory=dict)
    P: dict[tuple[int, int], int] = field(default_factory=dict)
    degree_hist: dict[int, int] = field(default_factory=dict)
    secdeg_hist: dict[int, int] = field(default_factory=dict)

    def merge(self, other: "JointCounts") -> "JointCounts":
        """Cell-wise sum; n adds up as well."""
        return JointCounts(
            n=self.n + other.n,
            N=dict(Counter(self.N) + Counter(other.N)),
            P=dict(Counter(self.P) + Counter(other.P)),
            degree_hist=dict(Counter(self.degree_hist) + Counter(other.degree_hist)),
            secdeg_hist=dict(Counter(self.secdeg_hist) + Counter(other.secdeg_hist)),
        )

    def x(self, k: int) -> int:
        return self.secdeg_hist.get(k, 0)

    def to_rows(self) -> list[tuple[str, int, int, int]]:
        """
        Flat (kind, l, k, count) rows. Histogram rows use l = 0 and put d or k
        in the third column.
        """
        rows = [("N", l, k, c) for (l, k), c in sorted(self.N.items())]
        rows += [("P", l, k, c) for (l, k), c in sorted(self.P.items())]
        rows += [("deg", 0, d, c) for d, c in sorted(self.degree_hist.items())]
        rows += [("secdeg", 0, k, c) for k, c in sorted(self.secdeg_hist.items())]
        return rows

    def violations(self, edge_count: int | None = None) -> list[str]:
        """
        Check the census identities and return a description of each one that
        fails (empty when the census is consistent).

        Args:
            edge_count (int, optional): edges of the graph; G_1^n has n edges,
                G_m^n has mn. Defaults to n.
        """
        problems = []
        n = self.n
        edges = n if edge_count is None else edge_count

        if sum(self.N.values()) + sum(self.P.values()) != n:
            problems.append("N and P do not add up to n")
        if sum(self.degree_hist.values()) != n:
            problems.append("degree histogram does not add up to n")
        if sum(d * c for d, c in self.degree_hist.items()) != 2 * edges:
            problems.append("degree histogram violates the handshake identity")

        column = Counter()
        for (l, k), c in list(self.N.items()) + list(self.P.items()):
            column[k] += c
        if dict(column) != {k: c for k, c in self.secdeg_hist.items() if c}:
            problems.append("second-degree histogram differs from the N + P column sums")

        for (l, k), c in self.N.items():
            if l < 1:
                problems.append(f"N has a vertex of degree {l}")
            if k == 0 and n >= 2:
                problems.append(f"N({l},0) = {c} for n >= 2")
            if 2 * l + k > 2 * edges:
                problems.append(f"N({l},{k}) is occupied beyond 2l + k <= 2E")
        for (l, k), c in self.P.items():
            if l < 2:
                problems.append(f"P has a looped vertex of degree {l}")
            if 2 * l + k - 2 > 2 * edges:
                problems.append(f"P({l},{k}) is occupied beyond 2l + k - 2 <= 2E")

        return problems
