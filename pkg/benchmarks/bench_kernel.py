"""Compare the compiled tensor-fold kernel with the pure Python fallback.

    python3 benchmarks/bench_kernel.py [--words 2000] [--length 12] [--repeat 5]
"""

import argparse
import random
import timeit

from supercrystal import _kernel_py, alphabet as al
from supercrystal.crystal import Word, explore_component

try:
    from supercrystal import _kernel
except ImportError:
    _kernel = None


def bench_moves(impl, words, params, repeat):
    def run():
        for w in words:
            impl.moves(w, params)

    return min(timeit.repeat(run, number=1, repeat=repeat))


def bench_component(repeat):
    A = al.half_trunc(3)
    seed = Word.parse(A, "1/2 1/2 1 3/2 2 5/2")
    return min(timeit.repeat(lambda: explore_component(seed), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--words", type=int, default=2000)
    ap.add_argument("--length", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for spec in ("half:3", "mixed:2,2", "mn:3,3"):
        A = al.parse_alphabet(spec)
        words = [tuple(rng.randrange(len(A)) for _ in range(args.length)) for _ in range(args.words)]
        params = A.root_params
        t_py = bench_moves(_kernel_py, words, params, args.repeat)
        line = f"{spec:10s} moves x{args.words}: python {t_py * 1e3:8.2f} ms"
        if _kernel is not None:
            assert all(_kernel.moves(w, params) == _kernel_py.moves(w, params) for w in words[:200])
            t_cy = bench_moves(_kernel, words, params, args.repeat)
            line += f"  cython {t_cy * 1e3:8.2f} ms  speedup {t_py / t_cy:5.1f}x"
        print(line)

    # end to end, through whichever backend kernel.py selected
    from supercrystal.kernel import BACKEND

    print(f"component exploration ({BACKEND}): {bench_component(args.repeat) * 1e3:.2f} ms")
    if _kernel is None:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
