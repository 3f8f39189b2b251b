"""Command-line entry point.

Subcommands::

    ccc encode --count 16 [--index K]
    ccc run --samples FILE [--eval FILE] [--r 0] [--trace] [--out FILE]
    ccc spiral [--pattern FILE] [--black 45] [--white 30] [--seed 42] [--r 1,2,3,4] [--out DIR]
    ccc mackey [--alpha 3 --beta 1.0005 --gamma 6 --tau 3 --length 200]
               [--init 1.5,0.65,-0.5,-0.7] [--r 4,5,6,7,10] [--out DIR] [--svg]

Exit status is 0 on success, 2 on bad arguments or malformed input files,
and 1 on anything else.
"""

from __future__ import annotations

import argparse
import io
import sys
from pathlib import Path

from . import mackey_glass as mg
from . import spiral
from .network import Network, TrainingSample, format_sample, parse_samples, train
from .quaternary import codeword_length, encode, format_symbols


class UsageError(Exception):
    pass


def _radii(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("radii must be nonnegative integers")
    return values


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def trace_tables(net: Network, train_inputs, eval_inputs) -> str:
    """Parameter tables for a trained network.

    Hidden-unit table columns: unit, x1..xd, bias input, s, w1..wd, bias
    weight, y1..yk (output weights as target bits).  Evaluation table
    columns: x1..xd, bias input, input to H1..Hm, output of H1..Hm, y1..yk.
    """
    d, m, k = net.d, len(net.hidden), net.k
    head = ["unit"] + [f"x{j}" for j in range(1, d + 1)] + ["bias", "s"]
    head += [f"w{j}" for j in range(1, d + 1)] + ["w_bias"] + [f"y{j}" for j in range(1, k + 1)]
    rows = [head]
    for i, (h, x, ow) in enumerate(zip(net.hidden, train_inputs, net.output_weights), 1):
        row = [f"H{i}"] + [str(s) for s in x] + ["1", str(h.s)]
        row += [str(w) for w in h.weights] + [str(h.bias_weight)]
        row += [str(int(v > 0)) for v in ow]
        rows.append(row)
    out = "# hidden units\n" + _table(rows)

    head = [f"x{j}" for j in range(1, d + 1)] + ["bias"]
    head += [f"in_H{i}" for i in range(1, m + 1)] + [f"out_H{i}" for i in range(1, m + 1)]
    head += [f"y{j}" for j in range(1, k + 1)]
    rows = [head]
    for x in eval_inputs:
        pre = net.hidden_inputs(x)
        row = [str(s) for s in x] + ["1"] + [str(int(v)) for v in pre]
        row += [str(int(v > 0)) for v in pre] + [str(b) for b in net(x)]
        rows.append(row)
    return out + "# evaluation\n" + _table(rows)


def cmd_encode(args, out) -> None:
    if args.count < 2:
        raise UsageError("--count must be at least 2")
    length = codeword_length(args.count)
    if args.index is not None:
        if not 1 <= args.index <= args.count:
            raise UsageError(f"--index must be in 1..{args.count}")
        out.write(format_symbols(encode(args.index, length)) + "\n")
        return
    width = len(str(args.count))
    for k in range(1, args.count + 1):
        out.write(f"{k:>{width}}  {format_symbols(encode(k, length))}\n")


def cmd_run(args, out) -> None:
    samples = parse_samples(Path(args.samples).read_text())
    if not samples:
        raise UsageError(f"{args.samples}: no training samples")
    if args.eval:
        probes = [s.input for s in parse_samples(Path(args.eval).read_text(), require_targets=False)]
    else:
        probes = [s.input for s in samples]
    train_inputs = [s.input for s in samples]
    for r in args.r:
        net = train(samples, r)
        out.write(f"# r = {r}\n")
        if args.trace:
            out.write(trace_tables(net, train_inputs, probes))
        else:
            for x in probes:
                out.write(format_sample(TrainingSample(x, net(x))) + "\n")


def cmd_spiral(args, out) -> None:
    if args.pattern:
        grid = spiral.load_pattern(Path(args.pattern).read_text())
    else:
        grid = spiral.bundled_pattern()
    plan = spiral.sample_training_points(grid, args.black, args.white, args.seed)
    reports = spiral.sweep(grid, plan, args.r)
    csv = "r,classified,misclassified\n" + "".join(
        f"{rep.r},{rep.classified},{rep.misclassified}\n" for rep in reports
    )
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        (d / "spiral_counts.csv").write_text(csv)
        (d / "pattern.txt").write_text(spiral.render(grid))
        (d / "samples.txt").write_text(spiral.render_samples(grid, plan))
        for rep in reports:
            (d / f"predictions_r{rep.r}.txt").write_text(spiral.render(rep.predictions))
        out.write(csv)
        return
    out.write(csv)
    out.write("\n# training points (+ black, o white)\n" + spiral.render_samples(grid, plan))
    for rep in reports:
        out.write(f"\n# predictions, r = {rep.r}\n" + spiral.render(rep.predictions))


def _prediction_csv(rows, series: mg.Series, q: mg.Quantizer) -> str:
    buf = io.StringIO()
    buf.write("k,actual,predicted,region_actual,region_predicted\n")
    for k, pred in rows:
        actual = series.at(k)
        buf.write(
            f"{k},{actual:.6f},{pred:.6f},{mg.quantize(q, actual)},{mg.quantize(q, pred)}\n"
        )
    return buf.getvalue()


def cmd_mackey(args, out) -> None:
    seeds = args.init if args.init is not None else mg.SeriesParams().seeds
    params = mg.SeriesParams(
        alpha=args.alpha,
        beta=args.beta,
        gamma=args.gamma,
        tau=args.tau,
        seeds=seeds,
        length=args.length,
    )
    if args.length < args.train + mg.WINDOW + 1:
        raise UsageError(f"--length must be at least {args.train + mg.WINDOW + 1}")
    if args.svg and not args.out:
        raise UsageError("--svg needs --out")
    series = mg.generate(params)
    q = mg.Quantizer()
    runs = [mg.run_experiment(series, r, args.train, q) for r in args.r]
    report = "r,nmse,nmse_variance\n" + "".join(
        f"{run.r},{run.nmse:.6f},{run.nmse_variance:.6f}\n" for run in runs
    )
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        (d / "series.csv").write_text(
            "k,x\n" + "".join(f"{k},{series.at(k):.6f}\n" for k in range(1, len(series) + 1))
        )
        for run in runs:
            (d / f"predictions_r{run.r}.csv").write_text(_prediction_csv(run.predictions, series, q))
            (d / f"training_r{run.r}.csv").write_text(_prediction_csv(run.recall, series, q))
            if args.svg:
                from .plotting import plot_run

                plot_run(run, series, d / f"mackey_r{run.r}.svg")
        (d / "nmse.csv").write_text(report)
    out.write(report)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ccc", description="3C corner classification networks")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("encode", help="print quaternary codewords")
    e.add_argument("--count", type=int, required=True, help="number of integers to represent")
    e.add_argument("--index", type=int, help="print only this codeword")
    e.set_defaults(func=cmd_encode)

    r = sub.add_parser("run", help="train on a sample file and evaluate")
    r.add_argument("--samples", required=True)
    r.add_argument("--eval", help="vectors to evaluate (default: the training inputs)")
    r.add_argument("--r", type=_radii, default=[0], help="radius list, e.g. 0,1,2")
    r.add_argument("--trace", action="store_true", help="print full parameter tables")
    r.add_argument("--out", help="write to this file instead of stdout")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("spiral", help="spiral pattern classification")
    s.add_argument("--pattern", help="16x16 '#'/'.' grid (default: bundled spiral)")
    s.add_argument("--black", type=int, default=45)
    s.add_argument("--white", type=int, default=30)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--r", type=_radii, default=[1, 2, 3, 4])
    s.add_argument("--out", help="output directory")
    s.set_defaults(func=cmd_spiral)

    m = sub.add_parser("mackey", help="Mackey-Glass one-step prediction")
    defaults = mg.SeriesParams()
    m.add_argument("--alpha", type=float, default=defaults.alpha)
    m.add_argument("--beta", type=float, default=defaults.beta)
    m.add_argument("--gamma", type=float, default=defaults.gamma)
    m.add_argument("--tau", type=int, default=defaults.tau)
    m.add_argument("--length", type=int, default=defaults.length)
    m.add_argument("--init", type=_floats, help="tau+1 comma-separated starting values")
    m.add_argument("--train", type=int, default=175, help="number of training windows")
    m.add_argument("--r", type=_radii, default=[4, 5, 6, 7, 10])
    m.add_argument("--out", help="output directory")
    m.add_argument("--svg", action="store_true", help="also write one SVG plot per radius")
    m.set_defaults(func=cmd_mackey)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "out", None) and args.command == "run":
            buf = io.StringIO()
            args.func(args, buf)
            Path(args.out).write_text(buf.getvalue())
        else:
            args.func(args, sys.stdout)
    except (UsageError, ValueError, OSError) as exc:
        print(f"ccc {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"ccc {args.command}: internal error: {exc!r}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
