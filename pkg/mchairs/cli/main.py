import argparse
import os
import sys
from typing import List, Optional, Sequence, Tuple

import tabulate

from mchairs.constructions import (
    build_recursive,
    check_lcs_certificate,
    ff_permutations,
    random_words,
)
from mchairs.engine import (
    CanonicalFirstStrategy,
    InteractiveStrategy,
    RandomStrategy,
    SchedulerModel,
    format_trace,
    is_safe,
    save_trace,
    simulate,
)
from mchairs.utils import (
    BudgetExceeded,
    MchairsError,
    get_header,
    get_output_dir,
    logging_config,
)
from mchairs.verifier import Winner, decide, extend, is_terminal, verify_every_n
from mchairs.words import ParseError, WordSystem, load_system, save_system
from mchairs.topology import adversary, lift_choice, reduce_team_strategy
from .freq_demo import POLICIES, ChurnScenario, freq_demo, random_scenario

EXIT_OK = 0
EXIT_SCHEDULER = 1
EXIT_BUDGET = 2
EXIT_MALFORMED = 3


def _logger():
    return logging_config(detail=False, name='mchairs')


def _parse_ids(text: Optional[str], size: int) -> Optional[Tuple[int, ...]]:
    """1-based comma separated word ids to 0-based indices."""
    if not text or text == 'all':
        return None
    ids = tuple(int(s) - 1 for s in text.split(',') if s.strip())
    for i in ids:
        if not 0 <= i < size:
            raise ValueError(f'Word id {i + 1} outside of 1..{size}')
    return ids


def _parse_starts(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if not text or text == 'all':
        return None
    return tuple(int(s) for s in text.split(',') if s.strip())


def _parse_pairing(text: Optional[str], size: int) -> Optional[List[Tuple[int, int]]]:
    """Pairs of 1-based word ids like '3:4,5:6'."""
    if not text:
        return None
    pairs = []
    for token in text.split(','):
        a, b = token.split(':')
        pairs.append(_parse_ids(f'{a},{b}', size))
    return pairs


def _system_name(args) -> str:
    return os.path.basename(args.system).replace(' ', '_')


def _output_path(args, default_name: str) -> str:
    return args.out or os.path.join(get_output_dir(args.command), default_name)


def _system_table(system: WordSystem) -> str:
    rows = [[i + 1, len(w), 'yes' if full else 'no', str(w) if len(w) <= 60 else str(w)[:57] + '...']
            for i, (w, full) in enumerate(zip(system.words, system.full_flags))]
    return tabulate.tabulate(rows, headers=['Word', 'Length', 'Full', 'Letters'], tablefmt='grid')


def _construct(args) -> int:
    pair = build_recursive(args.n)
    system = pair.s_words if args.family == 's' else pair.w_words
    path = _output_path(args, f'{args.family}{args.n}.words')
    save_system(system, path)
    _logger().info('\n'.join([get_header(f'Construction {args.family}{args.n}'),
                              f'm={system.m} written to {path}',
                              _system_table(system)]))
    return EXIT_OK


def _verify(args) -> int:
    system = load_system(args.system)
    model = SchedulerModel.from_string(args.model)
    if args.every_n:
        report = verify_every_n(system, args.every_n, model, args.budget, args.workers)
        rows = [[','.join(str(i + 1) for i in r.subset), r.winner, r.max_run] for r in report.results]
        _logger().info('\n'.join([get_header(f'Every {args.every_n} ({model})'),
                                  tabulate.tabulate(rows, headers=['Words', 'Winner', 'Max run'],
                                                    tablefmt='grid')]))
        if args.out:
            report.save(args.out)
        return EXIT_OK if report.passed else EXIT_SCHEDULER
    verdict = decide(system, model, _parse_starts(args.starts), _parse_ids(args.words, len(system)),
                     args.budget)
    info = [['Winner', verdict.winner],
            ['Model', verdict.model],
            ['Words', ','.join(str(i + 1) for i in verdict.word_indices)],
            ['Starts', 'all' if verdict.starts is None else ','.join(map(str, verdict.starts))],
            ['Max run', verdict.max_run],
            ['States', verdict.states]]
    outputs = [get_header('Verdict'), tabulate.tabulate(info, tablefmt='grid')]
    if verdict.prefix is not None and len(verdict.prefix):
        outputs.extend(['[ Prefix ]', format_trace(verdict.prefix, _system_name(args))])
    if verdict.cycle is not None:
        outputs.extend(['[ Cycle ]', format_trace(verdict.cycle, _system_name(args))])
    _logger().info('\n'.join(outputs))
    if args.out:
        verdict.save(args.out)
    return EXIT_OK if verdict.winner == Winner.TEAM else EXIT_SCHEDULER


def _terminal(args) -> int:
    system = load_system(args.system)
    model = SchedulerModel.from_string(args.model)
    report = is_terminal(system, model, _parse_ids(args.words, len(system)), args.budget)
    outputs = [get_header('Terminality'),
               tabulate.tabulate([['Terminal', report.terminal], ['Model', report.model],
                                  ['States', report.states]], tablefmt='grid')]
    if report.witness is not None:
        outputs.extend([f'[ Player {report.player + 1} completes its word ]',
                        format_trace(report.witness, _system_name(args))])
        if args.out:
            save_trace(report.witness, args.out, _system_name(args))
    _logger().info('\n'.join(outputs))
    return EXIT_OK if report.terminal else EXIT_SCHEDULER


def _make_strategy(name: str, seed: int):
    if name == 'random':
        return RandomStrategy(seed)
    return CanonicalFirstStrategy(name)


def _simulate(args, strategy=None) -> int:
    system = load_system(args.system)
    model = SchedulerModel.from_string(args.model)
    strategy = strategy or _make_strategy(args.strategy, args.seed)
    trace = simulate(system, _parse_ids(args.words, len(system)), _parse_starts(args.starts), strategy,
                     args.max_steps, model)
    text = format_trace(trace, _system_name(args))
    _logger().info('\n'.join([get_header(f'Simulation ({strategy.name})'), text.rstrip('\n'),
                              f'{len(trace)} moves, final configuration '
                              f'{"safe" if is_safe(trace.final) else "unsafe"}']))
    if args.out:
        save_trace(trace, args.out, _system_name(args))
    return EXIT_OK if is_safe(trace.final) else EXIT_SCHEDULER


def _play(args) -> int:
    return _simulate(args, InteractiveStrategy())


def _random(args) -> int:
    system = random_words(args.N, args.m, args.L, args.seed)
    path = _output_path(args, f'random_N{args.N}_m{args.m}_L{args.L}_seed{args.seed}.words')
    save_system(system, path)
    _logger().info('\n'.join([get_header('Random words'), f'written to {path}', _system_table(system)]))
    return EXIT_OK


def _perms(args) -> int:
    family = ff_permutations(args.p, args.d)
    path = _output_path(args, f'perms_p{args.p}_d{args.d}.words')
    save_system(family.perms, path)
    _logger().info('\n'.join([get_header(f'Field permutations p={args.p} d={args.d}'),
                              f'{len(family.perms)} permutations of [{family.m}] written to {path}']))
    return EXIT_OK


def _lcs(args) -> int:
    system = load_system(args.system)
    certificate = check_lcs_certificate(system, args.n)
    info = [['Certified', certificate.certified], ['Max cyclic LCS r', certificate.r],
            ['m', certificate.m], ['(n - 1) r', (certificate.n - 1) * certificate.r]]
    _logger().info('\n'.join([get_header('Cyclic LCS certificate'), tabulate.tabulate(info, tablefmt='grid')]))
    return EXIT_OK if certificate.certified else EXIT_SCHEDULER


def _extend(args) -> int:
    system = load_system(args.system)
    model = SchedulerModel.from_string(args.model)
    word = extend(system, args.n, model, args.budget, args.workers)
    extended = system.with_word(word)
    path = _output_path(args, 'extended.words')
    save_system(extended, path)
    _logger().info('\n'.join([get_header('Extension'),
                              f'new word of length {len(word)}, system written to {path}']))
    return EXIT_OK


def _topology_adversary(args) -> int:
    system = load_system(args.system)
    words, pairing, reduction = system, _parse_pairing(args.pairing, len(system)), None
    if args.reduce:
        reduction = reduce_team_strategy(system)
        words, pairing = reduction.words, reduction.pairing
    output_dir = get_output_dir(args.command)
    log_file = args.log or os.path.join(output_dir, 'psm_stats.txt')
    trace = adversary(words, pairing, args.t, args.facet_budget, log_file)
    if reduction is not None:
        trace = lift_choice(system, reduction, trace)
    team = trace.initial.word_indices
    outputs = [get_header('Adversary'),
               f'{len(trace)} moves on words {",".join(str(i + 1) for i in team)}, statistics in {log_file}']
    if args.check:
        verdict = decide(trace.initial.system, SchedulerModel.PAIRWISE,
                         starts=trace.initial.starts, word_indices=team, budget=args.budget)
        outputs.append(f'Independent verdict from these starts: {verdict.winner}')
    path = _output_path(args, 'adversary.trace')
    save_trace(trace, path, _system_name(args))
    outputs.append(f'Trace written to {path}')
    _logger().info('\n'.join(outputs))
    return EXIT_OK


def _freq_demo(args) -> int:
    system = load_system(args.system)
    if args.static:
        scenario = ChurnScenario.static(system, args.n, args.horizon, _parse_ids(args.words, len(system)))
    else:
        scenario = random_scenario(system, args.n, args.horizon, args.quiet, args.seed)
    log_file = os.path.join(get_output_dir(args.command), 'report.txt')
    report = freq_demo(scenario, args.seed, args.policy, args.budget, logging_file=log_file)
    if args.out:
        report.log.to_csv(args.out, index=False)
    return EXIT_OK if report.passed else EXIT_SCHEDULER


def _add_common(parser, system=True, model=None, words=False, budget=False):
    if system:
        parser.add_argument('--system', required=True, help='Word system file.')
    if model:
        parser.add_argument('--model', default=model, help='immediate, pairwise or canonical.')
    if words:
        parser.add_argument('--words', default=None, help='1-based word ids of the team. All by default.')
    if budget:
        parser.add_argument('--budget', type=int, default=None, help='Transition budget.')
    parser.add_argument('--out', default=None, help='Output file.')


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='mchairs', description='Musical chairs strategies workbench.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('construct', help='Recursive construction over 2n - 1 chairs.')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--family', choices=['s', 'w'], default='s')
    _add_common(p, system=False)
    p.set_defaults(func=_construct)

    p = subparsers.add_parser('verify', help='Decide the winner of a team.')
    _add_common(p, model='canonical', words=True, budget=True)
    p.add_argument('--starts', default='all', help='Comma separated 0-based start offsets or all.')
    p.add_argument('--every-n', dest='every_n', type=int, default=None,
                   help='Decide every subset of this size instead.')
    p.add_argument('--workers', type=int, default=None)
    p.set_defaults(func=_verify)

    p = subparsers.add_parser('terminal', help='Check that no word is fully traversed.')
    _add_common(p, model='immediate', words=True, budget=True)
    p.set_defaults(func=_terminal)

    for name, func in (('simulate', _simulate), ('play', _play)):
        p = subparsers.add_parser(name, help=f'{name.capitalize()} one game.')
        _add_common(p, model='immediate', words=True)
        p.add_argument('--starts', default=None, help='Comma separated 0-based start offsets.')
        p.add_argument('--strategy', choices=['both', 'first', 'second', 'random'], default='both')
        p.add_argument('--seed', type=int, default=0)
        p.add_argument('--max-steps', dest='max_steps', type=int, default=1000)
        p.set_defaults(func=func)

    p = subparsers.add_parser('random', help='Random words.')
    p.add_argument('--N', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--L', type=int, required=True)
    p.add_argument('--seed', type=int, default=0)
    _add_common(p, system=False)
    p.set_defaults(func=_random)

    p = subparsers.add_parser('perms', help='Finite field permutations of [p^2].')
    p.add_argument('--p', type=int, required=True)
    p.add_argument('--d', type=int, default=1)
    _add_common(p, system=False)
    p.set_defaults(func=_perms)

    p = subparsers.add_parser('lcs', help='Cyclic LCS certificate of permutations.')
    p.add_argument('--n', type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_lcs)

    p = subparsers.add_parser('extend', help='Add a word keeping every n words winning.')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--workers', type=int, default=None)
    _add_common(p, model='immediate', budget=True)
    p.set_defaults(func=_extend)

    p = subparsers.add_parser('topology-adversary', help='Long schedule over 2n - 2 chairs.')
    p.add_argument('--pairing', default=None, help="Pairs of 1-based word ids like '3:4,5:6'.")
    p.add_argument('--t', type=int, default=10)
    p.add_argument('--facet-budget', dest='facet_budget', type=int, default=None)
    p.add_argument('--reduce', action='store_true', help='Input is n team words, rotate them first.')
    p.add_argument('--check', action='store_true', help='Decide the resulting team independently.')
    p.add_argument('--log', default=None, help='Complex statistics file.')
    _add_common(p, budget=True)
    p.set_defaults(func=_topology_adversary)

    p = subparsers.add_parser('freq-demo', help='Frequency hopping with device churn.')
    p.add_argument('--n', type=int, required=True, help='Area capacity.')
    p.add_argument('--horizon', type=int, default=200)
    p.add_argument('--quiet', type=int, default=20)
    p.add_argument('--policy', choices=POLICIES, default='canonical')
    p.add_argument('--static', action='store_true', help='All devices arrive at time 0 and stay.')
    p.add_argument('--seed', type=int, default=0)
    _add_common(p, words=True, budget=True)
    p.set_defaults(func=_freq_demo)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_MALFORMED
    logger = _logger()
    try:
        return args.func(args)
    except BudgetExceeded as e:
        logger.error('Budget exceeded: %s', e)
        return EXIT_BUDGET
    except ParseError as e:
        logger.error('Malformed input: %s', e)
        return EXIT_MALFORMED
    except (MchairsError, ValueError) as e:
        logger.error('%s: %s', type(e).__name__, e)
        return EXIT_MALFORMED
    except OSError as e:
        logger.error('Cannot access file: %s', e)
        return EXIT_MALFORMED


def main():
    sys.exit(run_cli())


if __name__ == '__main__':
    main()
