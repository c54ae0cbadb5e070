"""Text formats shared by the command line and the test suite.

Every reader skips blank lines and lines starting with '#', so every writer
may prepend provenance comments without breaking its own reader.  Renderers
return the full file text; the write_* wrappers put it on disk.  Digit-string
fields (parity words, adjacency rows, received words) assume q <= 10.
"""

from __future__ import annotations

from pathlib import Path

from .bounds import AqEstimate, AqTable, CompareRow
from .distance import DistanceMatrix, ParityCode, matrix_from_lists
from .functions import FunctionSpec, linear_function, table_function
from .graph import FccEncoder, FccGraph
from .spectrum import Spectrum

TABLE_KINDS = ("exact", "upper", "lower")


def _data_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append(stripped)
    return out


def _comment_block(header_lines) -> str:
    return "".join(f"# {line}\n" for line in header_lines)


def parse_inline_rows(text: str) -> list[list[int]]:
    """Parse an inline matrix: rows split on ';', entries split on commas or
    whitespace; a row with neither separator is read digit by digit."""
    rows = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "," in chunk:
            cells = [c for c in (p.strip() for p in chunk.split(",")) if c]
        elif any(ch.isspace() for ch in chunk):
            cells = chunk.split()
        else:
            cells = list(chunk)
        rows.append([int(c) for c in cells])
    return rows


def label_text(label) -> str:
    """Compact display form of an index label: digit vectors collapse to
    digit strings, everything else falls back to str()."""
    if isinstance(label, tuple) and all(
        isinstance(x, int) and 0 <= x <= 9 for x in label
    ):
        return "".join(str(x) for x in label) if label else "-"
    return str(label)


# -- function files ----------------------------------------------------------

def read_function_file(path) -> FunctionSpec:
    """Parse a function file.

    Header line `q k l mode`; linear mode is followed by l rows of k
    space-separated digits, table mode by q^k lines `rank label` (integer
    labels; the l field is ignored for tables).
    """
    lines = _data_lines(Path(path).read_text())
    if not lines:
        raise ValueError(f"{path}: empty function file")
    head = lines[0].split()
    if len(head) != 4:
        raise ValueError(f"{path}: header must be 'q k l mode', got {lines[0]!r}")
    q, k, l = (int(x) for x in head[:3])
    mode = head[3]
    body = lines[1:]
    if mode == "linear":
        if len(body) != l:
            raise ValueError(f"{path}: expected {l} matrix rows, got {len(body)}")
        rows = [[int(x) for x in line.split()] for line in body]
        for row in rows:
            if len(row) != k:
                raise ValueError(f"{path}: matrix row {row} does not have length {k}")
        return linear_function(q, rows, k=k)
    if mode == "table":
        size = q**k
        if len(body) != size:
            raise ValueError(f"{path}: expected {size} table lines, got {len(body)}")
        labels: list[int | None] = [None] * size
        for line in body:
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}: table line {line!r} must be 'rank label'")
            rank, label = int(parts[0]), int(parts[1])
            if not 0 <= rank < size:
                raise ValueError(f"{path}: rank {rank} out of range")
            if labels[rank] is not None:
                raise ValueError(f"{path}: rank {rank} listed twice")
            labels[rank] = label
        return table_function(q, k, labels)
    raise ValueError(f"{path}: unknown mode {mode!r}")


def render_function_file(f: FunctionSpec, header_lines=()) -> str:
    l = f.l if f.mode == "linear" else 0
    lines = [f"{f.q} {f.k} {l} {f.mode}"]
    if f.mode == "linear":
        assert f.matrix is not None
        lines += [" ".join(str(x) for x in row) for row in f.matrix]
    else:
        assert f.table is not None
        lines += [f"{rank} {label}" for rank, label in enumerate(f.table)]
    return _comment_block(header_lines) + "\n".join(lines) + "\n"


def write_function_file(path, f: FunctionSpec, header_lines=()) -> None:
    Path(path).write_text(render_function_file(f, header_lines))


# -- distance matrices -------------------------------------------------------

def read_matrix_csv(path) -> DistanceMatrix:
    """Parse M comma-separated integer rows into a DistanceMatrix (labels
    default to row ranks; any label header comment is informational only)."""
    lines = _data_lines(Path(path).read_text())
    if not lines:
        raise ValueError(f"{path}: empty matrix file")
    entries = [[int(x) for x in line.split(",")] for line in lines]
    return matrix_from_lists(entries)


def render_matrix_csv(matrix: DistanceMatrix, header_lines=()) -> str:
    body = "\n".join(",".join(str(x) for x in row) for row in matrix.to_lists())
    return _comment_block(header_lines) + body + "\n"


def write_matrix_csv(path, matrix: DistanceMatrix, header_lines=()) -> None:
    Path(path).write_text(render_matrix_csv(matrix, header_lines))


# -- parity codes ------------------------------------------------------------

def read_parity_file(path, q: int) -> ParityCode:
    """Parse one parity word per line, each a digit string over F_q."""
    lines = _data_lines(Path(path).read_text())
    if not lines:
        raise ValueError(f"{path}: empty parity file")
    words = tuple(tuple(int(ch) for ch in line) for line in lines)
    return ParityCode(q=q, r=len(words[0]), words=words)


def render_parity_file(code: ParityCode, header_lines=()) -> str:
    body = "\n".join("".join(str(d) for d in w) for w in code.words)
    return _comment_block(header_lines) + body + "\n"


def write_parity_file(path, code: ParityCode, header_lines=()) -> None:
    Path(path).write_text(render_parity_file(code, header_lines))


# -- encoder files -----------------------------------------------------------

def render_encoder_file(E: FccEncoder, header_lines=()) -> str:
    """Header `q k r t`, then one `message_rank parity_digits` line per
    message ('-' stands for the empty parity word when r = 0)."""
    lines = [f"{E.q} {E.k} {E.r} {E.t}"]
    for rank in range(E.q**E.k):
        word = "".join(str(d) for d in E.parity[rank])
        lines.append(f"{rank} {word or '-'}")
    return _comment_block(header_lines) + "\n".join(lines) + "\n"


def write_encoder_file(path, E: FccEncoder, header_lines=()) -> None:
    Path(path).write_text(render_encoder_file(E, header_lines))


def read_encoder_file(path, f: FunctionSpec) -> FccEncoder:
    """Parse an encoder file against the function it protects (the file
    stores only q, k, r, t and the parity table)."""
    lines = _data_lines(Path(path).read_text())
    if not lines:
        raise ValueError(f"{path}: empty encoder file")
    head = lines[0].split()
    if len(head) != 4:
        raise ValueError(f"{path}: header must be 'q k r t', got {lines[0]!r}")
    q, k, r, t = (int(x) for x in head)
    if (q, k) != (f.q, f.k):
        raise ValueError(
            f"{path}: encoder is for q={q}, k={k}; the function has "
            f"q={f.q}, k={f.k}"
        )
    size = q**k
    body = lines[1:]
    if len(body) != size:
        raise ValueError(f"{path}: expected {size} parity lines, got {len(body)}")
    parity: list[tuple[int, ...] | None] = [None] * size
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(
                f"{path}: parity line {line!r} must be 'message_rank parity_digits'"
            )
        rank = int(parts[0])
        if not 0 <= rank < size:
            raise ValueError(f"{path}: message rank {rank} out of range")
        if parity[rank] is not None:
            raise ValueError(f"{path}: message rank {rank} listed twice")
        word = "" if parts[1] == "-" else parts[1]
        if len(word) != r:
            raise ValueError(f"{path}: parity {parts[1]!r} does not have length {r}")
        parity[rank] = tuple(int(ch) for ch in word)
    return FccEncoder(f=f, t=t, r=r, parity=tuple(parity))  # type: ignore[arg-type]


# -- code-size tables --------------------------------------------------------

def read_aq_table(path) -> AqTable:
    """Parse a code-size table CSV with columns q,n,d,value,kind (kind one of
    exact/upper/lower); a literal header row is allowed and skipped."""
    rows = []
    for line in _data_lines(Path(path).read_text()):
        parts = [p.strip() for p in line.split(",")]
        if parts and parts[0] == "q":
            continue
        if len(parts) != 5:
            raise ValueError(f"{path}: row {line!r} must have 5 columns")
        q, n, d, value = (int(x) for x in parts[:4])
        kind = parts[4]
        if kind not in TABLE_KINDS:
            raise ValueError(
                f"{path}: kind must be one of {'/'.join(TABLE_KINDS)}, got {kind!r}"
            )
        rows.append(AqEstimate(q=q, n=n, d=d, value=value, kind=f"table_{kind}"))
    return AqTable(rows)


# -- comparison reports ------------------------------------------------------

def render_compare_csv(
    rows, header_lines=(), include_table_columns: bool = False
) -> str:
    """CSV of CompareRow values; the two table-delta columns appear only when
    requested, with empty cells where a delta is unknown."""
    cols = ["k", "r_prime", "r_bgs", "delta_bgs"]
    if include_table_columns:
        cols += ["delta_blb", "delta_bub"]
    lines = [",".join(cols)]
    for row in rows:
        cells = [row.k, row.r_prime, row.r_bgs, row.delta_bgs]
        if include_table_columns:
            cells += [row.delta_blb, row.delta_bub]
        lines.append(",".join("" if c is None else str(c) for c in cells))
    return _comment_block(header_lines) + "\n".join(lines) + "\n"


def write_compare_csv(
    path, rows, header_lines=(), include_table_columns: bool = False
) -> None:
    Path(path).write_text(
        render_compare_csv(rows, header_lines, include_table_columns)
    )


# -- spectra -----------------------------------------------------------------

def render_spectrum_csv(spectrum: Spectrum, header_lines=()) -> str:
    lines = ["index_rank,eigenvalue"]
    lines += [f"{i},{ev}" for i, ev in enumerate(spectrum.eigenvalues)]
    return _comment_block(header_lines) + "\n".join(lines) + "\n"


def write_spectrum_csv(path, spectrum: Spectrum, header_lines=()) -> None:
    Path(path).write_text(render_spectrum_csv(spectrum, header_lines))


# -- adjacency ---------------------------------------------------------------

def render_adjacency_file(G: FccGraph, header_lines=()) -> str:
    n = G.n_vertices
    lines = [
        "".join("1" if G.rows[i] >> j & 1 else "0" for j in range(n))
        for i in range(n)
    ]
    return _comment_block(header_lines) + "\n".join(lines) + "\n"


def write_adjacency_file(path, G: FccGraph, header_lines=()) -> None:
    Path(path).write_text(render_adjacency_file(G, header_lines))


def read_adjacency_file(path) -> tuple[tuple[int, ...], ...]:
    """Parse 0/1 digit rows into a tuple of tuples (no graph construction)."""
    lines = _data_lines(Path(path).read_text())
    rows = tuple(tuple(int(ch) for ch in line) for line in lines)
    for row in rows:
        if len(row) != len(rows):
            raise ValueError(f"{path}: adjacency rows must form a square matrix")
        if any(x not in (0, 1) for x in row):
            raise ValueError(f"{path}: adjacency entries must be 0 or 1")
    return rows
