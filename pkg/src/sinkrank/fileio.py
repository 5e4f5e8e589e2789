"""Game and stochastic-game file formats.

Games travel as JSON (canonical, carries labels and epsilon) or as a bare
CSV payoff matrix. Stochastic games are JSON only, with transition and
reward tables keyed by "state|action1|action2".
"""

from __future__ import annotations

import csv
import io
import json
import sys

import numpy as np

from .errors import GameFileError
from .game import SymmetricGame, new_symmetric_game
from .metagame import StochasticGame, new_stochastic_game

_GAME_KEYS = {"n", "labels", "payoff_row", "epsilon"}
_STOCHASTIC_KEYS = {
    "states",
    "actions",
    "initial_dist",
    "discount1",
    "discount2",
    "transitions",
    "reward1",
    "reward2",
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise GameFileError(f"cannot read {path}: {exc}") from exc


def _require_number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise GameFileError(f"{what} must be a number, got {value!r}")
    return float(value)


def game_from_dict(doc: dict) -> SymmetricGame:
    if not isinstance(doc, dict):
        raise GameFileError("game document must be a JSON object")
    unknown = set(doc) - _GAME_KEYS
    if unknown:
        raise GameFileError(f"unknown game keys: {sorted(unknown)}")
    for key in ("n", "payoff_row"):
        if key not in doc:
            raise GameFileError(f"game document missing required key {key!r}")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise GameFileError(f"n must be an integer, got {n!r}")
    if not isinstance(doc["payoff_row"], list):
        raise GameFileError("payoff_row must be an array of arrays")
    labels = doc.get("labels")
    if labels is not None and not isinstance(labels, list):
        raise GameFileError("labels must be an array of strings")
    epsilon = doc.get("epsilon", 1e-9)
    return new_symmetric_game(
        n=n,
        payoff_row=doc["payoff_row"],
        labels=labels,
        epsilon=_require_number(epsilon, "epsilon"),
    )


def _game_from_csv(text: str) -> SymmetricGame:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise GameFileError("empty CSV game file")
    try:
        matrix = [[float(cell) for cell in row] for row in rows]
    except ValueError as exc:
        raise GameFileError(f"non-numeric CSV cell: {exc}") from exc
    return new_symmetric_game(len(matrix), matrix)


def parse_game(text: str) -> SymmetricGame:
    """Parses JSON if the text is JSON, otherwise falls back to CSV."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        return _game_from_csv(text)
    return game_from_dict(doc)


def load_game(path: str) -> SymmetricGame:
    """Reads a game from a file path or stdin when the path is '-'."""
    return parse_game(_read_text(path))


def game_to_dict(game: SymmetricGame) -> dict:
    return {
        "n": game.n,
        "labels": list(game.labels),
        "payoff_row": game.payoff_row.tolist(),
        "epsilon": game.epsilon,
    }


def dumps_game(game: SymmetricGame) -> str:
    """Deterministic JSON serialization; round-trips through parse_game."""
    return json.dumps(game_to_dict(game), sort_keys=True, indent=2) + "\n"


def _table_key(state: str, a1: str, a2: str) -> str:
    return f"{state}|{a1}|{a2}"


def stochastic_game_from_dict(doc: dict) -> StochasticGame:
    if not isinstance(doc, dict):
        raise GameFileError("stochastic game document must be a JSON object")
    missing = _STOCHASTIC_KEYS - set(doc)
    if missing:
        raise GameFileError(f"stochastic game missing keys: {sorted(missing)}")
    unknown = set(doc) - _STOCHASTIC_KEYS
    if unknown:
        raise GameFileError(f"unknown stochastic game keys: {sorted(unknown)}")

    states = [str(x) for x in doc["states"]]
    actions = [str(a) for a in doc["actions"]]
    nx, na = len(states), len(actions)
    if nx < 1 or na < 1:
        raise GameFileError("states and actions must be non-empty arrays")
    transition = np.zeros((nx, na, na, nx))
    reward1 = np.zeros((nx, na, na))
    reward2 = np.zeros((nx, na, na))
    for xi, state in enumerate(states):
        for i1, a1 in enumerate(actions):
            for i2, a2 in enumerate(actions):
                key = _table_key(state, a1, a2)
                try:
                    transition[xi, i1, i2] = doc["transitions"][key]
                    reward1[xi, i1, i2] = doc["reward1"][key]
                    reward2[xi, i1, i2] = doc["reward2"][key]
                except KeyError as exc:
                    raise GameFileError(f"missing table entry for {key!r}") from exc
                except (TypeError, ValueError) as exc:
                    raise GameFileError(f"bad table entry for {key!r}: {exc}") from exc
    try:
        initial = np.asarray(doc["initial_dist"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise GameFileError(f"bad initial_dist: {exc}") from exc
    return new_stochastic_game(
        states=states,
        actions=actions,
        initial_dist=initial,
        transition=transition,
        reward1=reward1,
        reward2=reward2,
        beta1=_require_number(doc["discount1"], "discount1"),
        beta2=_require_number(doc["discount2"], "discount2"),
    )


def load_stochastic_game(path: str) -> StochasticGame:
    text = _read_text(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"invalid JSON in {path}: {exc}") from exc
    return stochastic_game_from_dict(doc)


def frequencies_to_csv(labels: tuple[str, ...], frequencies: dict[int, float]) -> str:
    """CSV text with one (strategy label, frequency) row per strategy."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["strategy", "frequency"])
    for s, label in enumerate(labels):
        writer.writerow([label, f"{frequencies[s]:.4f}"])
    return buffer.getvalue()
