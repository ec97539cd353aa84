"""Walk through the greedy decomposition of a 3 x 4 stochastic matrix.

Every number below is an exact rational; re-running the script always
produces the same terms.
"""

from centrostoch import Matrix, decompose_stochastic


def show(mat, indent="  "):
    widths = [
        max(len(str(mat.at(i, j))) for i in range(1, mat.nrows + 1))
        for j in range(1, mat.ncols + 1)
    ]
    for i in range(1, mat.nrows + 1):
        cells = [str(x).rjust(w) for x, w in zip(mat.row(i), widths)]
        print(indent + " ".join(cells))


def main():
    a = Matrix(
        [
            ["1/2", 0, "1/2", 0],
            ["3/10", 0, 0, "7/10"],
            ["2/5", "1/5", "2/5", 0],
        ]
    )
    print("The matrix to decompose (rows sum to 1):")
    show(a)

    comb = decompose_stochastic(a)
    print(f"\nGreedy decomposition into {len(comb)} extreme points:")
    for k, (coeff, term) in enumerate(comb, 1):
        print(f"\nterm {k}, weight {coeff}:")
        show(term)

    print("\nEach term has a single 1 per row; the weights sum to",
          sum(c for c, _ in comb))
    print("Recombining reproduces the input exactly:", comb.combine() == a)
    print("Term count is at most nnz - m + 1 =", a.nnz() - a.nrows + 1)


if __name__ == "__main__":
    main()
