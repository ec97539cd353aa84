"""Count and list the vertices of faces cut out by (0,1) patterns.

Two independent routes: the closed-form product of row sums, and a filter
over the full extreme-point enumeration. They agree on every pattern.
"""

from centrostoch import (
    FacePattern,
    count_face_vertices_centro,
    count_face_vertices_stochastic,
    enumerate_face_vertices,
)


def show(mat):
    for row in mat.entries:
        print("   ", " ".join(str(x).rjust(3) for x in row))


def main():
    pattern = FacePattern([[1, 1], [1, 1], [0, 1]])
    print("Pattern with row sums 2, 2, 1:")
    show(pattern.matrix)
    print("\nclosed form count:", count_face_vertices_stochastic(pattern))
    verts = list(enumerate_face_vertices(pattern))
    print("enumerated count:", len(verts))
    for k, v in enumerate(verts, 1):
        print(f"\nvertex {k}")
        show(v)

    print("\nCentrosymmetric 3 x 3 pattern with a free center entry:")
    middle = FacePattern([[1, 1, 1], [1, 0, 1], [1, 1, 1]])
    show(middle.matrix)
    print("count:", count_face_vertices_centro(middle))
    for v in enumerate_face_vertices(middle, centro=True):
        print()
        show(v)

    print("\nOpening the center entry doubles the center choices:")
    full = FacePattern([[1, 1, 1], [1, 1, 1], [1, 1, 1]])
    print("count:", count_face_vertices_centro(full))


if __name__ == "__main__":
    main()
