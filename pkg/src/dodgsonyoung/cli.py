"""Command-line interface.

Every verb is a thin wrapper around the library.  Results go to stdout;
domain errors (missing files, malformed input, unknown candidates, oracle
caps) exit with code 1 and a message on stderr; usage errors exit with 2.
Decision verbs print lowercase true/false and exit 0 for both answers.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import exact, homogeneous, reductions
from .errors import CapExceededError, ParseError
from .exact import ScoreReport
from .profiles import Profile, condorcet_winner, parse_profile, replicate, serialize_profile

_SCORERS = {
    "dodgson": exact.dodgson_score,
    "young": exact.young_score,
    "dodgson-star": homogeneous.dodgson_star_score,
    "young-star": homogeneous.young_star_score,
}
_WINNER_PREDICATES = {
    "dodgson": exact.dodgson_winner,
    "young": exact.young_winner,
    "dodgson-star": homogeneous.dodgson_star_winner,
    "young-star": homogeneous.young_star_winner,
}
_RANKING_PREDICATES = {
    "dodgson": exact.dodgson_ranking,
    "young": exact.young_ranking,
    "dodgson-star": homogeneous.dodgson_star_ranking,
    "young-star": homogeneous.young_star_ranking,
}
_CONVERGENCE_BASE = {"dodgson-star": exact.dodgson_score, "young-star": exact.young_score}


def _frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _score_repr(value):
    return _frac_str(value) if isinstance(value, Fraction) else value


def emit_report(report: ScoreReport, fmt: str) -> str:
    """Render a score report; rationals appear as p/q strings in both formats."""
    if fmt == "json":
        payload = {name: _score_repr(score) for name, score in report.scores}
        return json.dumps(payload) + "\n"
    if len(report.scores) == 1:
        return f"{_score_repr(report.scores[0][1])}\n"
    width = max(len(name) for name, _ in report.scores)
    lines = [f"{name.ljust(width)}  {_score_repr(score)}" for name, score in report.scores]
    return "\n".join(lines) + "\n"


def _load_profile(path: str) -> Profile:
    return parse_profile(Path(path).read_text(encoding="utf-8"))


def _print_bool(value: bool) -> int:
    print("true" if value else "false")
    return 0


def _cmd_score(args) -> int:
    profile = _load_profile(args.profile)
    scorer = _SCORERS[args.scheme]
    selected = args.candidate or list(profile.candidates)
    report = ScoreReport(args.scheme, tuple((c, scorer(profile, c)) for c in selected))
    sys.stdout.write(emit_report(report, args.format))
    return 0


def _cmd_winner(args) -> int:
    profile = _load_profile(args.profile)
    return _print_bool(_WINNER_PREDICATES[args.scheme](profile, args.candidate))


def _cmd_ranking(args) -> int:
    profile = _load_profile(args.profile)
    return _print_bool(_RANKING_PREDICATES[args.scheme](profile, args.candidate, args.other))


def _cmd_condorcet(args) -> int:
    profile = _load_profile(args.profile)
    winner = condorcet_winner(profile)
    if args.format == "json":
        print(json.dumps({"winner": winner}))
    else:
        print(winner if winner is not None else "none")
    return 0


def _cmd_reduce(args, parser) -> int:
    from_graphs = args.graph1 is not None or args.graph2 is not None
    from_sets = args.sets1 is not None or args.sets2 is not None
    if from_graphs == from_sets:
        parser.error("give either --graph1/--graph2 or --sets1/--sets2")
    if from_graphs:
        if args.graph1 is None or args.graph2 is None:
            parser.error("both --graph1 and --graph2 are required")
        g1 = reductions.parse_graph(Path(args.graph1).read_text(encoding="utf-8"))
        g2 = reductions.parse_graph(Path(args.graph2).read_text(encoding="utf-8"))
        inst = reductions.inc_to_mspc(g1, g2)
    else:
        if args.sets1 is None or args.sets2 is None:
            parser.error("both --sets1 and --sets2 are required")
        inst = reductions.MSPCInstance(
            reductions.parse_set_family(Path(args.sets1).read_text(encoding="utf-8")),
            reductions.parse_set_family(Path(args.sets2).read_text(encoding="utf-8")),
        )
    if args.emit == "mspc":
        if args.format == "json":
            payload = {
                "base1": list(inst.first.base),
                "family1": [list(m) for m in inst.first.family],
                "base2": list(inst.second.base),
                "family2": [list(m) for m in inst.second.family],
            }
            print(json.dumps(payload))
        else:
            sys.stdout.write(reductions.serialize_mspc(inst))
        return 0
    out = reductions.mspc_to_young_ranking(inst)
    if args.format == "json":
        payload = {
            "c": out.c,
            "d": out.d,
            "kappa1": reductions.kappa(inst.first),
            "kappa2": reductions.kappa(inst.second),
            "profile": serialize_profile(out.profile),
        }
        print(json.dumps(payload))
    else:
        sys.stdout.write(serialize_profile(out.profile))
    return 0


def _cmd_amplify(args) -> int:
    profile = _load_profile(args.profile)
    amplified = reductions.amplify_for_winner(
        profile, args.candidate, args.other, allow_single_voter=args.allow_single_voter
    )
    if args.format == "json":
        print(json.dumps({"profile": serialize_profile(amplified)}))
    else:
        sys.stdout.write(serialize_profile(amplified))
    return 0


def _cmd_verify(args) -> int:
    g1 = reductions.parse_graph(Path(args.graph1).read_text(encoding="utf-8"))
    g2 = reductions.parse_graph(Path(args.graph2).read_text(encoding="utf-8"))
    report = reductions.verify_reduction_chain(g1, g2)
    if args.format == "json":
        payload = {
            "alpha": [report.alpha1, report.alpha2],
            "kappa": [report.kappa1, report.kappa2],
            "young": [report.young_c, report.young_d],
            "equations_hold": report.equations_hold,
            "ranking": report.ranking_answer,
            "winner_checked": report.winner_checked,
            "winner": report.winner_answer,
            "consistent": report.consistent,
        }
        print(json.dumps(payload))
        return 0
    winner_line = (
        str(report.winner_answer).lower() if report.winner_checked else "skipped (instance too large)"
    )
    lines = [
        f"alpha:        {report.alpha1} {report.alpha2}",
        f"kappa:        {report.kappa1} {report.kappa2}",
        f"young(c, d):  {report.young_c} {report.young_d}",
        f"equations:    {'ok' if report.equations_hold else 'VIOLATED'}",
        f"ranking(c,d): {str(report.ranking_answer).lower()}",
        f"winner(c):    {winner_line}",
        str(report.consistent).lower(),
    ]
    print("\n".join(lines))
    return 0


def _cmd_convergence(args) -> int:
    profile = _load_profile(args.profile)
    qs = []
    for piece in args.q.split(","):
        piece = piece.strip()
        try:
            q = int(piece)
        except ValueError:
            raise ValueError(f"bad replication factor {piece!r}") from None
        if q < 1:
            raise ValueError(f"replication factors must be positive, got {q}")
        qs.append(q)
    if profile.num_voters * max(qs) > args.max_expanded:
        raise CapExceededError(f"convergence run capped at {args.max_expanded} expanded voters")
    base_score = _CONVERGENCE_BASE[args.scheme]
    star = _SCORERS[args.scheme]
    points = []
    for q in qs:
        score = base_score(replicate(profile, q), args.candidate)
        points.append((q, score, Fraction(score, q)))
    limit = star(profile, args.candidate)
    if args.format == "json":
        payload = {
            "scheme": args.scheme,
            "candidate": args.candidate,
            "points": [
                {"q": q, "score": score, "ratio": _frac_str(ratio)} for q, score, ratio in points
            ],
            "limit": _frac_str(limit),
        }
        print(json.dumps(payload))
        return 0
    lines = ["q      score  score/q"]
    for q, score, ratio in points:
        lines.append(f"{str(q).ljust(6)} {str(score).ljust(6)} {_frac_str(ratio)}")
    lines.append(f"limit         {_frac_str(limit)}")
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dodgsonyoung",
        description="Exact and homogeneous Dodgson/Young election scoring.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_score = sub.add_parser("score", help="score candidates under a scheme")
    p_score.add_argument("--scheme", choices=homogeneous.SCHEMES, required=True)
    p_score.add_argument("--profile", required=True)
    p_score.add_argument("--candidate", action="append")
    add_format(p_score)

    p_winner = sub.add_parser("winner", help="is the candidate a winner? prints true/false")
    p_winner.add_argument("--scheme", choices=homogeneous.SCHEMES, required=True)
    p_winner.add_argument("--profile", required=True)
    p_winner.add_argument("--candidate", required=True)
    add_format(p_winner)

    p_rank = sub.add_parser("ranking", help="does candidate tie-or-defeat other? true/false")
    p_rank.add_argument("--scheme", choices=homogeneous.SCHEMES, required=True)
    p_rank.add_argument("--profile", required=True)
    p_rank.add_argument("--candidate", required=True)
    p_rank.add_argument("--other", required=True)
    add_format(p_rank)

    p_cond = sub.add_parser("condorcet", help="print the Condorcet winner or 'none'")
    p_cond.add_argument("--profile", required=True)
    add_format(p_cond)

    p_reduce = sub.add_parser(
        "reduce", help="build a Young Ranking instance from graphs or set families"
    )
    p_reduce.add_argument("--graph1")
    p_reduce.add_argument("--graph2")
    p_reduce.add_argument("--sets1")
    p_reduce.add_argument("--sets2")
    p_reduce.add_argument("--emit", choices=("profile", "mspc"), default="profile")
    add_format(p_reduce)

    p_amp = sub.add_parser("amplify", help="rotate non-designated candidates per voter")
    p_amp.add_argument("--profile", required=True)
    p_amp.add_argument("--candidate", required=True)
    p_amp.add_argument("--other", required=True)
    p_amp.add_argument("--allow-single-voter", action="store_true")
    add_format(p_amp)

    p_verify = sub.add_parser("verify", help="run the whole reduction chain; prints true/false")
    p_verify.add_argument("--graph1", required=True)
    p_verify.add_argument("--graph2", required=True)
    add_format(p_verify)

    p_conv = sub.add_parser(
        "convergence", help="table of score(qV)/q against the starred LP value"
    )
    p_conv.add_argument("--scheme", choices=("dodgson-star", "young-star"), required=True)
    p_conv.add_argument("--profile", required=True)
    p_conv.add_argument("--candidate", required=True)
    p_conv.add_argument("--q", default="1,2,4,8,16")
    p_conv.add_argument("--max-expanded", type=int, default=256)
    add_format(p_conv)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "score":
            return _cmd_score(args)
        if args.verb == "winner":
            return _cmd_winner(args)
        if args.verb == "ranking":
            return _cmd_ranking(args)
        if args.verb == "condorcet":
            return _cmd_condorcet(args)
        if args.verb == "reduce":
            return _cmd_reduce(args, parser)
        if args.verb == "amplify":
            return _cmd_amplify(args)
        if args.verb == "verify":
            return _cmd_verify(args)
        if args.verb == "convergence":
            return _cmd_convergence(args)
    except (ParseError, CapExceededError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled verb {args.verb!r}")  # pragma: no cover


def main() -> None:
    sys.exit(run())
