"""Text format of traces.

    mc-trace v1
    system=<name> model=<MODEL> words=<i1,...> starts=<k1,...>
    step <k>: moved={ids} -> positions=(p1,...,pn) chairs=(c1,...,cn)

Word indices and player ids are 1-based, start offsets and positions 0-based.
"""

import re
from typing import Optional

from mchairs.words import ParseError, WordSystem
from .common import Configuration, SchedulerModel, Trace

MAGIC = 'mc-trace v1'
_HEADER_PATTERN = re.compile(r'^system=(\S+) model=(\w+) words=([\d,]*) starts=([\d,]*)$')
_STEP_PATTERN = re.compile(
    r'^step (\d+): moved=\{([\d,]*)\} -> positions=\(([\d,]*)\) chairs=\(([\d,]*)\)$')


def _join(values) -> str:
    return ','.join(str(v) for v in values)


def _split(text: str):
    return tuple(int(s) for s in text.split(',') if s)


def format_trace(trace: Trace, system_name: Optional[str] = None) -> str:
    initial = trace.initial
    lines = [MAGIC,
             f'system={system_name or "-"} model={trace.model} '
             f'words={_join(i + 1 for i in initial.word_indices)} starts={_join(initial.starts)}']
    for k, step in enumerate(trace.steps):
        configuration = step.configuration
        lines.append(f'step {k + 1}: moved={{{_join(sorted(i + 1 for i in step.moved))}}} '
                     f'-> positions=({_join(configuration.positions)}) chairs=({_join(configuration.chairs)})')
    return '\n'.join(lines) + '\n'


def parse_trace(text: str, system: WordSystem) -> Trace:
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    if not lines or lines[0] != MAGIC:
        raise ParseError(f'expected {MAGIC!r}', 1)
    match = _HEADER_PATTERN.match(lines[1]) if len(lines) > 1 else None
    if not match:
        raise ParseError('malformed trace header', 2)
    try:
        model = SchedulerModel.from_string(match.group(2))
    except ValueError as e:
        raise ParseError(str(e), 2) from e
    word_indices = [i - 1 for i in _split(match.group(3))]
    starts = _split(match.group(4))
    try:
        configuration = Configuration.initial(system, starts, word_indices)
    except (ValueError, IndexError) as e:
        raise ParseError(str(e), 2) from e
    trace = Trace(configuration, model)
    for offset, line in enumerate(lines[2:]):
        line_number = offset + 3
        match = _STEP_PATTERN.match(line)
        if not match or int(match.group(1)) != offset + 1:
            raise ParseError(f'malformed step {line!r}', line_number)
        moved = frozenset(i - 1 for i in _split(match.group(2)))
        if not moved or not all(0 <= i < configuration.n for i in moved):
            raise ParseError('moved set names unknown players', line_number)
        configuration = configuration.advance(moved)
        if (configuration.positions != _split(match.group(3))
                or configuration.chairs != _split(match.group(4))):
            raise ParseError('positions do not follow from the moved set', line_number)
        trace.append(moved, configuration)
    return trace


def save_trace(trace: Trace, path: str, system_name: Optional[str] = None) -> None:
    with open(path, 'w') as f:
        f.write(format_trace(trace, system_name))


def load_trace(path: str, system: WordSystem) -> Trace:
    with open(path, 'r') as f:
        return parse_trace(f.read(), system)
