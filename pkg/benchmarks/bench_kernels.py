"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

import argparse
import json
import random
import timeit

from fzeta.kernels import available_backends, load_backend


def cases(rng):
    small_a = [rng.randint(-50, 50) for _ in range(400)]
    small_b = [rng.randint(-50, 50) for _ in range(400)]
    big_a = [rng.randint(-10 ** 30, 10 ** 30) for _ in range(200)]
    big_b = [rng.randint(-10 ** 30, 10 ** 30) for _ in range(200)]
    div_d = [rng.randint(-5, 5) for _ in range(60)] + [1]
    div_a = [rng.randint(-5, 5) for _ in range(600)]
    shift = [rng.randint(-9, 9) for _ in range(300)]
    return {
        "poly_mul small 400x400": lambda k: k.poly_mul(small_a, small_b),
        "poly_mul big 200x200": lambda k: k.poly_mul(big_a, big_b),
        "poly_divrem_unit 600/61": lambda k: k.poly_divrem_unit(div_a, div_d),
        "poly_taylor_shift deg 300": lambda k: k.poly_taylor_shift(shift, 1),
        "count_invertible 3x3 F_3": lambda k: k.count_invertible(3, 3),
        "count_mateq 2x2 F_7": lambda k: k.count_mateq([0, 1, -1, 0], 2, 7),
        "count_rref Gr(5,2) F_3": lambda k: k.count_rref(5, 2, 3),
        "count_projective P^6 F_5": lambda k: k.count_projective(6, 5),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    backends = {name: load_backend(name) for name in available_backends()}
    results = {}
    for label, fn in cases(random.Random(args.seed)).items():
        outputs = {name: fn(k) for name, k in backends.items()}
        if len({repr(v) for v in outputs.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        results[label] = {name: min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
                          for name, k in backends.items()}

    if args.json:
        print(json.dumps(results, indent=2))
        return
    names = list(backends)
    print(f"{'kernel':32s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for label, t in results.items():
        row = f"{label:32s}" + "".join(f"{t[n] * 1e3:10.2f}ms" for n in names)
        if len(names) > 1:
            row += f"  {t['python'] / t[names[0]]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
