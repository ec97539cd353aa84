"""Read extremality off the bipartite zero-pattern graph.

The graph has a row vertex per matrix row, a column vertex per matrix
column, and one edge per nonzero entry. A stochastic matrix is extreme
exactly when the graph is a forest whose row vertices all have degree 1;
the centrosymmetric version relaxes the center row to degree 1 or 2.
"""

from centrostoch import (
    Matrix,
    basis_centro_odd,
    bipartite_of,
    fill,
    is_extreme_centro_via_graph,
    is_forest,
    longest_path,
)


def main():
    mat = basis_centro_odd(5, 4)[-1]
    print("Matrix:")
    for row in mat.entries:
        print("  ", " ".join(str(x).rjust(3) for x in row))

    g = bipartite_of(mat)
    print("\nEdges of its bipartite graph:")
    for i, j in g.sorted_edges():
        print(f"  r{i} -- s{j}")

    print("\nforest:", is_forest(g))
    print("longest path (edges):", longest_path(g))
    print("fill:", fill(g), "  (here (m+1)/(m*n) = 6/20)")
    print("extreme by the graph test:", is_extreme_centro_via_graph(mat))

    dense = Matrix([["1/2", "1/2"], ["1/2", "1/2"]])
    g2 = bipartite_of(dense)
    print("\nThe all-halves 2 x 2 matrix gives a 4-cycle; forest:", is_forest(g2))
    print("extreme:", is_extreme_centro_via_graph(dense))


if __name__ == "__main__":
    main()
