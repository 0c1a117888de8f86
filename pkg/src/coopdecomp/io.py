"""JSON documents for games, weights, regions and results.

Rationals travel as strings ``"p/q"`` (or ``"k"``) and coalitions as
comma-separated ascending player indices, e.g. ``"1,3"``.
"""
import dataclasses
import json
from fractions import Fraction

from .errors import InvariantViolation, ParseError
from .game import Game, SetFunction, make_game, members
from .polyhedra import HPolytope, VPolytope, to_h
from .solutions import ProbabilisticWeights


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s, where="value"):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"{where}: expected a rational string, got {s!r}")
    try:
        return Fraction(s.strip() if isinstance(s, str) else s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: cannot read {s!r} as a rational") from None


def format_coalition(mask):
    return ",".join(map(str, members(mask)))


def parse_coalition(key, n, where="key"):
    """Mask of a key such as ``"1,3"``; indices must be strictly ascending within ``1..n``."""
    if not isinstance(key, str) or not key.strip():
        raise ParseError(f"{where}: empty coalition key")
    players = []
    for part in key.split(","):
        part = part.strip()
        if not part.isdigit():
            raise ParseError(f"{where} {key!r}: {part!r} is not a player index")
        players.append(int(part))
    for a, b in zip(players, players[1:]):
        if b <= a:
            raise ParseError(f"{where} {key!r}: player indices must be strictly ascending")
    if players[0] < 1 or players[-1] > n:
        raise ParseError(f"{where} {key!r}: player index outside 1..{n}")
    mask = 0
    for i in players:
        mask |= 1 << (i - 1)
    return mask


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _player_count(doc):
    if not isinstance(doc, dict) or "n" not in doc:
        raise ParseError('missing field "n"')
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParseError(f'"n" must be an integer, got {n!r}')
    return n


# -- games --------------------------------------------------------------------

def game_from_document(doc):
    n = _player_count(doc)
    values = doc.get("values", {})
    if not isinstance(values, dict):
        raise ParseError('"values" must be an object')
    pairs = []
    for key, raw in values.items():
        if key.strip() in ("", "∅"):
            if parse_rational(raw, "value of the empty coalition") != 0:
                raise InvariantViolation("the empty coalition must be worth 0")
            continue
        pairs.append((parse_coalition(key, n), parse_rational(raw, f"value of {key!r}")))
    return make_game(n, pairs)


def game_to_document(v):
    """Canonical form: nonzero worths only, in canonical coalition order."""
    return {"n": v.n, "values": {format_coalition(a): format_rational(x) for a, x in v.items() if x}}


def set_function_to_document(f):
    """Like :func:`game_to_document`; the empty coalition appears under the key ``""`` when nonzero."""
    return {"n": f.n, "values": {format_coalition(a): format_rational(x) for a, x in f.items() if x}}


def parse_game(path):
    return game_from_document(_load(path))


def write_game(v, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(game_to_document(v), fh, indent=2)
        fh.write("\n")


# -- weights and regions ------------------------------------------------------

def weights_from_document(doc):
    """``{"n": n, "weights": [table_1, ..., table_n]}`` with subset keys; ``""`` is the empty set."""
    n = _player_count(doc)
    tables = doc.get("weights")
    if not isinstance(tables, list):
        raise ParseError('"weights" must be a list with one table per player')
    out = []
    for i, table in enumerate(tables, start=1):
        if not isinstance(table, dict):
            raise ParseError(f"weights of player {i} must be an object")
        t = {}
        for key, raw in table.items():
            mask = 0 if key.strip() in ("", "∅") else parse_coalition(key, n, f"weights of player {i}")
            t[mask] = parse_rational(raw, f"weight of {key!r} for player {i}")
        out.append(t)
    return ProbabilisticWeights(n, out)


def parse_weights(path):
    return weights_from_document(_load(path))


def _rows(raw, dim, what):
    if not isinstance(raw, list):
        raise ParseError(f'"{what}" must be a list of rows')
    rows = []
    for k, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != dim + 1:
            raise ParseError(f"{what} row {k}: expected {dim + 1} entries")
        vals = [parse_rational(x, f"{what} row {k}") for x in row]
        rows.append((tuple(vals[:-1]), vals[-1]))
    return rows


def region_from_document(doc):
    """``{"n": n, "inequalities": [[a_1, ..., a_n, b], ...], "equalities": [...]}`` meaning ``a.x >= b`` / ``a.x = b``."""
    n = _player_count(doc)
    ineqs = _rows(doc.get("inequalities", []), n, "inequalities")
    eqs = _rows(doc.get("equalities", []), n, "equalities")
    return HPolytope(n, ineqs, eqs)


def parse_region(path):
    return region_from_document(_load(path))


# -- results ------------------------------------------------------------------

def allocation_to_json(x):
    return [format_rational(c) for c in x]


def allocation_from_json(raw):
    return tuple(parse_rational(c) for c in raw)


def _rows_to_json(rows):
    return [allocation_to_json(tuple(a) + (b,)) for a, b in rows]


def polytope_to_json(p):
    """Vertices plus an irredundant H-description (``a.x >= b`` rows with ``b`` last)."""
    doc = {"dim": p.dim, "vertices": [allocation_to_json(x) for x in p.vertices]}
    if p.vertices:
        h = to_h(p)
        doc["inequalities"] = _rows_to_json(h.inequalities)
        doc["equalities"] = _rows_to_json(h.equalities)
    return doc


def polytope_from_json(doc):
    return VPolytope(doc["dim"], [allocation_from_json(x) for x in doc["vertices"]])


def to_json(obj):
    """Exact, JSON-ready form of library values."""
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Game):
        return game_to_document(obj)
    if isinstance(obj, SetFunction):
        return set_function_to_document(obj)
    if isinstance(obj, VPolytope):
        return polytope_to_json(obj)
    if isinstance(obj, HPolytope):
        return {"dim": obj.dim, "inequalities": _rows_to_json(obj.inequalities), "equalities": _rows_to_json(obj.equalities)}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_json(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {_key(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_json(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _key(k):
    if isinstance(k, tuple):
        return ",".join(map(str, k))
    return str(k)


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

