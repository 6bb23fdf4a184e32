"""Character tables of S_4 and W_2 with the bipartition convention, plus the
decomposition of a permutation character induced from the positive embedding."""
from level0.weylrep import SYM, WEYL, ClassFunction, GroupShape, character_table, decompose, first_embedding, induce_along


def show(kind, n):
    table = character_table(kind, n)
    classes = list(next(iter(table.values())))
    print(f"{kind}{n} classes:", classes)
    for label, row in table.items():
        print(f"  {str(label):<18}", [row[c] for c in classes])


def main():
    show(SYM, 4)
    show(WEYL, 2)
    ind = induce_along(first_embedding(3), ClassFunction.constant(GroupShape(((SYM, 3),)), 1))
    print("Ind_{S3}^{W3} 1 =", decompose(ind))


if __name__ == "__main__":
    main()
