import time

from groupiepy.graph import DENSE_THRESHOLD, gen_gnp
from groupiepy.groupie import count_groupies


def generate(n, p, repeat=5):
    start = time.time()
    edges = 0
    for seed in range(repeat):
        edges += gen_gnp(n, p, seed).e
    end = time.time()
    print("gen_gnp n={} p={}\t-> {:.4f}s per graph, {:.0f} edges/s".format(
        n, p, (end - start) / repeat, edges / (end - start)))


def classify(n, p, repeat=5):
    graphs = [gen_gnp(n, p, seed) for seed in range(repeat)]
    start = time.time()
    for graph in graphs:
        count_groupies(graph)
    end = time.time()
    print("count_groupies n={} p={}\t-> {:.4f}s per graph".format(
        n, p, (end - start) / repeat))


def main():
    print("dense generation (p >= {}):".format(DENSE_THRESHOLD))
    generate(1600, 0.5)
    generate(10000, 0.5, repeat=2)

    print("\nsparse generation (geometric skipping):")
    generate(10000, 0.01)
    generate(100000, 0.0005)

    print("\nclassification:")
    classify(1600, 0.5)
    classify(10000, 0.5, repeat=2)


if __name__ == "__main__":
    main()
