"""Count reduced words of the longest element and braid-graph edges per type."""

from foldmv.root_datum import parse_type
from foldmv.weyl import braid_moves, longest_element, word_graph

TYPES = ["A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"]


def main() -> None:
    for name in TYPES:
        root = parse_type(name)
        w0, length = longest_element(root)
        words = word_graph(root, w0.word)
        edges = sum(len(braid_moves(root, w)) for w in words) // 2
        print(f"{name}: length {length}, reduced words {len(words)}, braid edges {edges}")


if __name__ == "__main__":
    main()
