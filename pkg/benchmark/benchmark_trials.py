import time

from groupiepy.graph import ModelParams
from groupiepy.montecarlo import run_trials


def trials(params, n, n_jobs):
    start = time.time()
    estimate = run_trials(params, n, seed=42, n_jobs=n_jobs)
    end = time.time()
    print("n_jobs={}\t-> {:.3f}s, mean {:.5f}".format(
        n_jobs, end - start, estimate.mean))


def main():
    params = ModelParams.gnp(1600, 0.5)
    n = 200

    print("B(1600, 0.5) trial benchmark for {} trials:".format(n))
    trials(params, n, 1)
    trials(params, n, 2)
    trials(params, n, -1)


if __name__ == "__main__":
    main()
