"""Mealy automata: letter-to-letter transducers over a shared alphabet.

States and letters are 0-based integers everywhere; labels are cosmetic.
A state q of an automaton induces a length-preserving transformation on
words: feed the word through the transducer starting at q.

Composition convention used throughout the package: the juxtaposition
``g1 g2`` acts as ``g1 o g2`` (rightmost factor applied first).  The state
``(q1, q2)`` of a product automaton acts as ``f_q1 o f_q2``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import AutomatonFormatError, CapacityError

DEFAULT_STATE_CAP = 10**6


@dataclass(frozen=True)
class MealyAutomaton:
    """Transition/output tables of a finite transducer.

    ``transitions[q][x]`` is the next state after reading letter ``x`` in
    state ``q``; ``outputs[q][x]`` is the letter emitted.
    """

    alphabet_size: int
    transitions: tuple[tuple[int, ...], ...]
    outputs: tuple[tuple[int, ...], ...]
    state_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        m, n = self.alphabet_size, self.state_count
        if m < 1 or n < 1:
            raise ValueError("automaton needs at least one state and one letter")
        if len(self.outputs) != n:
            raise ValueError("transition and output tables disagree on state count")
        for q in range(n):
            if len(self.transitions[q]) != m or len(self.outputs[q]) != m:
                raise ValueError(f"state {q}: table rows must have {m} entries")
            if any(not 0 <= t < n for t in self.transitions[q]):
                raise ValueError(f"state {q}: transition entry out of range")
            if any(not 0 <= o < m for o in self.outputs[q]):
                raise ValueError(f"state {q}: output entry out of range")
        if self.state_labels is not None and len(self.state_labels) != n:
            raise ValueError("label count must match state count")

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def label(self, q: int) -> str:
        if self.state_labels is not None:
            return self.state_labels[q]
        return f"q{q}"


@dataclass(frozen=True)
class WreathForm:
    """First-level decomposition of a state's action.

    ``successor_states[x]`` acts on the remainder after the first letter
    ``x``; ``output_map[x]`` is the image of the first letter.  The output
    map need not be a permutation.
    """

    successor_states: tuple[int, ...]
    output_map: tuple[int, ...]


#: The smallest Mealy automaton of intermediate growth: two states over a
#: two-letter alphabet.  State 0 (f0) swaps letters and stays put; state 1
#: (f1) outputs x1 constantly, moving to state 0 after reading x1.
I2 = MealyAutomaton(
    alphabet_size=2,
    transitions=((0, 0), (1, 0)),
    outputs=((1, 0), (1, 1)),
    state_labels=("q0", "q1"),
)

#: One-state identity transducer on two letters.
IDENTITY2 = MealyAutomaton(2, ((0, 0),), ((0, 1),), ("id",))


def apply(a: MealyAutomaton, q: int, word) -> tuple[int, ...]:
    """Run the transducer from state ``q`` over ``word``; returns the output word."""
    if not 0 <= q < a.state_count:
        raise ValueError(f"state {q} out of range")
    out = []
    cur = q
    for x in word:
        if not 0 <= x < a.alphabet_size:
            raise ValueError(f"letter {x} out of range for alphabet of size {a.alphabet_size}")
        out.append(a.outputs[cur][x])
        cur = a.transitions[cur][x]
    return tuple(out)


def unrolled_form(a: MealyAutomaton, q: int) -> WreathForm:
    if not 0 <= q < a.state_count:
        raise ValueError(f"state {q} out of range")
    return WreathForm(tuple(a.transitions[q]), tuple(a.outputs[q]))


def is_invertible(a: MealyAutomaton) -> bool:
    """True iff every state's output map is a permutation of the alphabet."""
    return all(len(set(row)) == a.alphabet_size for row in a.outputs)


def product(a: MealyAutomaton, b: MealyAutomaton) -> MealyAutomaton:
    """Product automaton: state (q1, q2) acts as f_q1 o f_q2.

    State ``(q1, q2)`` is flattened to index ``q1 * b.state_count + q2``.
    """
    if a.alphabet_size != b.alphabet_size:
        raise ValueError("automata must share an alphabet")
    m = a.alphabet_size
    nb = b.state_count
    trans, outs, labels = [], [], []
    for q1 in range(a.state_count):
        for q2 in range(nb):
            trow, orow = [], []
            for x in range(m):
                y = b.outputs[q2][x]
                trow.append(a.transitions[q1][y] * nb + b.transitions[q2][x])
                orow.append(a.outputs[q1][y])
            trans.append(tuple(trow))
            outs.append(tuple(orow))
            labels.append(f"{a.label(q1)}.{b.label(q2)}")
    return MealyAutomaton(m, tuple(trans), tuple(outs), tuple(labels))


def power(a: MealyAutomaton, n: int) -> MealyAutomaton:
    """n-fold left-associated product of ``a`` with itself."""
    if n < 1:
        raise ValueError("power requires n >= 1")
    result = a
    for _ in range(n - 1):
        result = product(result, a)
    return result


def minimize(a: MealyAutomaton) -> MealyAutomaton:
    """Collapse states inducing equal transformations (Moore refinement).

    Partition states by their output rows, then refine on successor blocks
    until stable.  All states are kept (no reachability pruning): every
    state defines a transformation and equivalence is on the full set.
    """
    n, m = a.state_count, a.alphabet_size
    block = _assign_blocks([a.outputs[q] for q in range(n)])
    while True:
        sig = [
            (block[q], tuple(block[a.transitions[q][x]] for x in range(m)))
            for q in range(n)
        ]
        new_block = _assign_blocks(sig)
        if new_block == block:
            break
        block = new_block
    reps = {}
    for q in range(n):
        reps.setdefault(block[q], q)
    trans, outs, labels = [], [], []
    for b in range(len(reps)):
        q = reps[b]
        trans.append(tuple(block[a.transitions[q][x]] for x in range(m)))
        outs.append(tuple(a.outputs[q]))
        labels.append(a.label(q))
    return MealyAutomaton(m, tuple(trans), tuple(outs), tuple(labels))


def _assign_blocks(keys):
    """Number distinct keys by first occurrence."""
    ids = {}
    out = []
    for k in keys:
        if k not in ids:
            ids[k] = len(ids)
        out.append(ids[k])
    return out


def automaton_growth(a: MealyAutomaton, N: int, max_states: int = DEFAULT_STATE_CAP) -> list[int]:
    """State counts of the minimized powers a^1 .. a^N.

    Computed incrementally: minimize(a^n) = minimize(minimize(a^(n-1)) x a),
    valid because minimization preserves the induced transformation set.
    """
    if N < 1:
        raise ValueError("growth requires N >= 1")
    counts = []
    cur = minimize(a)
    counts.append(cur.state_count)
    for _ in range(1, N):
        nxt = product(cur, a)
        if nxt.state_count > max_states:
            raise CapacityError(
                f"minimization of {nxt.state_count} states exceeds cap {max_states}"
            )
        cur = minimize(nxt)
        counts.append(cur.state_count)
    return counts


def _mapping_holds(a, b, theta, xi, psi):
    for q in range(a.state_count):
        for x in range(a.alphabet_size):
            if theta[a.transitions[q][x]] != b.transitions[theta[q]][xi[x]]:
                return False
            if psi[a.outputs[q][x]] != b.outputs[theta[q]][xi[x]]:
                return False
    return True


def are_isomorphic(a: MealyAutomaton, b: MealyAutomaton) -> bool:
    """Exhaustive search for state/letter relabelings identifying a with b."""
    if a.state_count != b.state_count or a.alphabet_size != b.alphabet_size:
        return False
    letters = range(a.alphabet_size)
    for theta in itertools.permutations(range(a.state_count)):
        for xi in itertools.permutations(letters):
            for psi in itertools.permutations(letters):
                if _mapping_holds(a, b, theta, xi, psi):
                    return True
    return False


def are_similar(a: MealyAutomaton, b: MealyAutomaton) -> bool:
    """Isomorphism with the same permutation on input and output letters."""
    if a.state_count != b.state_count or a.alphabet_size != b.alphabet_size:
        return False
    for theta in itertools.permutations(range(a.state_count)):
        for xi in itertools.permutations(range(a.alphabet_size)):
            if _mapping_holds(a, b, theta, xi, xi):
                return True
    return False


_STATE_RE = re.compile(r"^state\s+(\S+)\s+trans((?:\s+\d+)+)\s+out((?:\s+\d+)+)$")


def parse_automaton(text: str) -> MealyAutomaton:
    """Parse the automaton text format.

    Format::

        alphabet <m>
        states <n>
        state <name> trans <t0> ... <t_{m-1}> out <o0> ... <o_{m-1}>

    ``#`` starts a comment; blank lines are ignored.
    """
    lines = []
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((i, stripped))
    if len(lines) < 2:
        raise AutomatonFormatError("expected 'alphabet' and 'states' header lines")
    m = _parse_header(lines[0], "alphabet")
    n = _parse_header(lines[1], "states")
    body = lines[2:]
    if len(body) != n:
        raise AutomatonFormatError(f"expected {n} state lines, found {len(body)}")
    trans, outs, labels = [], [], []
    for lineno, line in body:
        match = _STATE_RE.match(line)
        if not match:
            raise AutomatonFormatError("malformed state line", line=lineno)
        labels.append(match.group(1))
        trow = tuple(int(t) for t in match.group(2).split())
        orow = tuple(int(o) for o in match.group(3).split())
        if len(trow) != m or len(orow) != m:
            raise AutomatonFormatError(f"expected {m} trans and out entries", line=lineno)
        trans.append(trow)
        outs.append(orow)
    try:
        return MealyAutomaton(m, tuple(trans), tuple(outs), tuple(labels))
    except ValueError as exc:
        raise AutomatonFormatError(str(exc)) from exc


def _parse_header(entry, keyword):
    lineno, line = entry
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit():
        raise AutomatonFormatError(f"expected '{keyword} <count>'", line=lineno)
    return int(parts[1])


def format_automaton(a: MealyAutomaton) -> str:
    lines = [f"alphabet {a.alphabet_size}", f"states {a.state_count}"]
    for q in range(a.state_count):
        trans = " ".join(str(t) for t in a.transitions[q])
        outs = " ".join(str(o) for o in a.outputs[q])
        lines.append(f"state {a.label(q)} trans {trans} out {outs}")
    return "\n".join(lines) + "\n"


def load_automaton(path) -> MealyAutomaton:
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read())
