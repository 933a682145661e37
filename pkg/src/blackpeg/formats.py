"""Plain-text formats for satisfiability instances, transcripts and 3DM instances.

Instance / transcript::

    # optional comment lines
    N K
    c_0 c_1 ... c_{N-1} score
    ...

3DM::

    n m
    i j k        (m lines, 1-based)

Blank lines and ``#`` lines are skipped on input. Comments of an instance are
written back as a leading header so that ``write(parse(text)) == text`` for
anything this module produced.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from blackpeg.errors import MalformedInstance
from blackpeg.reduction import ThreeDMInstance
from blackpeg.satisfiability import SatInstance


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<string>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source


def _data_lines(text: str, source: str) -> Iterator[Tuple[int, List[Tuple[int, int]]]]:
    """Yield (line number, [(column, value), ...]) for each non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = []
        for match in re.finditer(r"\S+", raw):
            col = match.start() + 1
            try:
                tokens.append((col, int(match.group())))
            except ValueError:
                raise ParseError(f"expected an integer, got {match.group()!r}",
                                 lineno, col, source) from None
        yield lineno, tokens


def _comments(text: str) -> Tuple[str, ...]:
    out = []
    for raw in text.splitlines():
        s = raw.strip()
        if s.startswith("#"):
            out.append(s[1:].strip())
        elif s:
            break
    return tuple(out)


def parse_instance(text: str, source: str = "<string>") -> SatInstance:
    lines = _data_lines(text, source)
    header = next(lines, None)
    if header is None:
        raise ParseError("missing 'N K' header", 1, 1, source)
    lineno, toks = header
    if len(toks) != 2:
        raise ParseError(f"header needs 2 integers 'N K', found {len(toks)}", lineno, 1, source)
    (_, N), (_, K) = toks
    if N < 1 or K < 1:
        raise ParseError(f"N and K must be positive, got N={N}, K={K}", lineno, 1, source)
    constraints = []
    for lineno, toks in lines:
        if len(toks) != N + 1:
            col = toks[min(len(toks), N + 1) - 1][0] if toks else 1
            raise ParseError(f"expected {N} colors and a score, found {len(toks)} integers",
                             lineno, col, source)
        for col, c in toks[:-1]:
            if not 0 <= c < K:
                raise ParseError(f"color {c} outside [0, {K})", lineno, col, source)
        col, score = toks[-1]
        if not 0 <= score <= N:
            raise ParseError(f"score {score} outside [0, {N}]", lineno, col, source)
        constraints.append((tuple(v for _, v in toks[:-1]), score))
    return SatInstance(N, K, tuple(constraints), _comments(text))


def format_instance(inst: SatInstance) -> str:
    out = [f"# {c}" if c else "#" for c in inst.comments]
    out.append(f"{inst.N} {inst.K}")
    out.extend(" ".join(map(str, g)) + f" {s}" for g, s in inst.constraints)
    return "\n".join(out) + "\n"


def parse_3dm(text: str, source: str = "<string>") -> ThreeDMInstance:
    lines = _data_lines(text, source)
    header = next(lines, None)
    if header is None:
        raise ParseError("missing 'n m' header", 1, 1, source)
    lineno, toks = header
    if len(toks) != 2:
        raise ParseError(f"header needs 2 integers 'n m', found {len(toks)}", lineno, 1, source)
    (_, n), (_, m) = toks
    triples = []
    for lineno, toks in lines:
        if len(toks) != 3:
            raise ParseError(f"expected a triple 'i j k', found {len(toks)} integers",
                             lineno, 1, source)
        for col, v in toks:
            if not 1 <= v <= n:
                raise ParseError(f"index {v} outside [1, {n}]", lineno, col, source)
        triples.append(tuple(v for _, v in toks))
    if len(triples) != m:
        raise ParseError(f"header announces {m} triples, found {len(triples)}",
                         header[0], header[1][1][0], source)
    try:
        return ThreeDMInstance(n, tuple(triples))
    except MalformedInstance as exc:
        raise ParseError(str(exc), header[0], 1, source) from None


def format_3dm(tdm: ThreeDMInstance) -> str:
    out = [f"{tdm.n} {tdm.m}"]
    out.extend(" ".join(map(str, t)) for t in tdm.triples)
    return "\n".join(out) + "\n"


PathLike = Union[str, Path]


def read_instance(path: PathLike) -> SatInstance:
    return parse_instance(Path(path).read_text(), str(path))


def write_instance(inst: SatInstance, path: PathLike) -> None:
    Path(path).write_text(format_instance(inst))


def read_3dm(path: PathLike) -> ThreeDMInstance:
    return parse_3dm(Path(path).read_text(), str(path))


def write_3dm(tdm: ThreeDMInstance, path: PathLike) -> None:
    Path(path).write_text(format_3dm(tdm))

