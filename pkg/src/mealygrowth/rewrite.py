"""String rewriting for the two-generator transformation monoid of I2.

Generator words are sequences over {0, 1} standing for the two generators
(0 = the involution, 1 = the non-invertible generator).  The defining
relations are ``00 = empty`` and, for every p >= 0,

    r_p:  1 (01)^p (10)^p 11  =  1 (01)^p (10)^p

equivalently, for p >= 1,  1 (01)^p 1 (01)^p 1  =  1 (01)^p 1 (01)^{p-1} 0.

Every element has a canonical minimal word: empty, ``0``, or

    0^e1  1 (01)^{p_1} 1 (01)^{p_2} 1 ... (01)^{p_k} 1 (01)^{tail}  0^e2

with strictly increasing exponents p_1 < ... < p_k.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tables
from .mealy import I2, apply


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a CLI word string over {0, 1}."""
    out = []
    for pos, ch in enumerate(text):
        if ch not in "01":
            raise ValueError(f"invalid generator {ch!r} at position {pos}")
        out.append(int(ch))
    return tuple(out)


def format_word(word) -> str:
    return "".join(str(c) for c in word)


class NormalForm:
    """Base class for the three canonical-word variants."""

    __slots__ = ()


@dataclass(frozen=True)
class One(NormalForm):
    """The monoid identity (empty word)."""

    word_length = 0

    def describe(self) -> str:
        return "one"


@dataclass(frozen=True)
class JustF0(NormalForm):
    """The involution generator alone."""

    word_length = 1

    def describe(self) -> str:
        return "f0"


@dataclass(frozen=True)
class General(NormalForm):
    """Canonical word containing at least one f1.

    ``exponents`` are the strictly increasing p_1 < ... < p_k; ``tail`` is
    the final exponent p_{k+1} (unconstrained).
    """

    eps1: int
    exponents: tuple[int, ...]
    tail: int
    eps2: int

    def __post_init__(self):
        if self.eps1 not in (0, 1) or self.eps2 not in (0, 1):
            raise ValueError("eps1/eps2 must be 0 or 1")
        if self.tail < 0 or any(p < 0 for p in self.exponents):
            raise ValueError("exponents must be non-negative")
        if any(a >= b for a, b in zip(self.exponents, self.exponents[1:])):
            raise ValueError("exponents must be strictly increasing")

    @property
    def word_length(self) -> int:
        f1_block = 1 + sum(2 * p + 1 for p in self.exponents)
        return self.eps1 + f1_block + 2 * self.tail + self.eps2

    def describe(self) -> str:
        exps = ",".join(str(p) for p in self.exponents)
        return f"e1={self.eps1};p=[{exps}];tail={self.tail};e2={self.eps2}"


ONE = One()
F0 = JustF0()


def nf_to_word(nf: NormalForm) -> tuple[int, ...]:
    if isinstance(nf, One):
        return ()
    if isinstance(nf, JustF0):
        return (0,)
    word = [0] * nf.eps1 + [1]
    for p in nf.exponents:
        word += [0, 1] * p + [1]
    word += [0, 1] * nf.tail + [0] * nf.eps2
    return tuple(word)


def _cleanup(word, steps):
    """Cancel 00 and collapse 111 -> 1 with a single stack pass."""
    out = []
    for c in word:
        if c == 0 and out and out[-1] == 0:
            out.pop()
            steps += 1
        elif c == 1 and len(out) >= 2 and out[-1] == 1 and out[-2] == 1:
            out.pop()
            steps += 1
        else:
            out.append(c)
    return out, steps


def _parse_blocks(word):
    """Split a 00/111-free word into (eps1, exponent blocks, tail, eps2).

    Returns a NormalForm directly when the word has no f1.
    """
    if not word:
        return ONE
    if word == [0]:
        return F0
    i = 0
    eps1 = 0
    if word[0] == 0:
        eps1 = 1
        i = 1
    assert word[i] == 1
    i += 1
    exps = []
    n = len(word)
    while True:
        p = 0
        while i + 1 < n and word[i] == 0 and word[i + 1] == 1:
            p += 1
            i += 2
        if i == n:
            return eps1, exps, p, 0
        if word[i] == 1:
            exps.append(p)
            i += 1
        else:
            assert i == n - 1 and word[i] == 0
            return eps1, exps, p, 1


def reduce_detailed(word) -> tuple[NormalForm, int]:
    """Reduce to normal form; also return the number of relation applications.

    Every application (00-cancellation, 111-collapse, or r_p) shortens the
    word by exactly two letters, so at most len(word)//2 are performed.
    """
    w = []
    for c in word:
        if c not in (0, 1):
            raise ValueError(f"invalid generator {c!r}")
        w.append(c)
    budget = len(w) // 2
    steps = 0
    w, steps = _cleanup(w, steps)
    while True:
        parsed = _parse_blocks(w)
        if isinstance(parsed, NormalForm):
            nf = parsed
            break
        eps1, exps, tail, eps2 = parsed
        j = next(
            (i for i in range(len(exps) - 1) if exps[i] >= exps[i + 1]), None
        )
        if j is None:
            nf = General(eps1, tuple(exps), tail, eps2)
            break
        # apply r_p at the leftmost violating pair: the separator after
        # block j+1 turns into f0 and one (f0 f1) pair of the block is lost
        p = exps[j + 1]
        new = [0] * eps1 + [1]
        for i, e in enumerate(exps):
            if i == j + 1:
                new += [0, 1] * (p - 1) + [0]
            else:
                new += [0, 1] * e + [1]
        new += [0, 1] * tail + [0] * eps2
        steps += 1
        w, steps = _cleanup(new, steps)
    assert steps <= budget
    return nf, steps


def reduce(word) -> NormalForm:
    """Canonical minimal form of a generator word."""
    return reduce_detailed(word)[0]


def reduce_quotient(word, n: int) -> NormalForm:
    """Normal form in the quotient acting on length-n words.

    Any exponent reaching n-1 makes the prefix up to it a left-side zero,
    which absorbs the rest of the word.
    """
    if n < 1:
        raise ValueError("quotient level must be >= 1")
    nf = reduce(word)
    if not isinstance(nf, General):
        return nf
    for i, p in enumerate(nf.exponents):
        if p >= n - 1:
            return General(nf.eps1, nf.exponents[:i], n - 1, 0)
    if nf.tail + nf.eps2 > n - 1:
        return General(nf.eps1, nf.exponents, n - 1, 0)
    return nf


def words_equal(w1, w2) -> bool:
    return reduce(w1) == reduce(w2)


def words_equal_quotient(w1, w2, n: int) -> bool:
    return reduce_quotient(w1, n) == reduce_quotient(w2, n)


def relation_sides(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Left- and right-hand words of the defining relation r_p."""
    if p < 0:
        raise ValueError("p must be non-negative")
    lhs = (1,) + (0, 1) * p + (1, 0) * p + (1, 1)
    rhs = (1,) + (0, 1) * p + (1, 0) * p
    return lhs, rhs


def left_zero_word(n: int) -> tuple[int, ...]:
    """The left-side zero of the level-n quotient: f1 (f0 f1)^(n-1)."""
    if n < 1:
        raise ValueError("level must be >= 1")
    return (1,) + (0, 1) * (n - 1)


def verify_relation(p: int, k: int) -> bool:
    """Check r_p by comparing level-k tables of both sides."""
    lhs, rhs = relation_sides(p)
    return tables.word_table(I2, lhs, k) == tables.word_table(I2, rhs, k)


def verify_left_zero(n: int) -> tuple[bool, bool]:
    """(z absorbs at level n and is the constant map to x1^n,
       both absorption equations fail at level n+1)."""
    z = left_zero_word(n)
    zt = tables.word_table(I2, z, n)
    constant = bool((zt.outputs == 2**n - 1).all())
    holds = (
        constant
        and tables.word_table(I2, z + (0,), n) == zt
        and tables.word_table(I2, z + (1,), n) == zt
    )
    zt1 = tables.word_table(I2, z, n + 1)
    fails = (
        tables.word_table(I2, z + (0,), n + 1) != zt1
        and tables.word_table(I2, z + (1,), n + 1) != zt1
    )
    return holds, fails


def apply_word(word, letters) -> tuple[int, ...]:
    """Act on an input word by a generator word (rightmost factor first)."""
    result = tuple(letters)
    for q in reversed(tuple(word)):
        result = apply(I2, q, result)
    return result


def eval_test_word(nf: General, n: int) -> tuple[int, ...]:
    """Image of x0^n under a test-shaped element, checked two ways.

    The element must look like f0 f1 (f0f1)^{p_1} f1 ... (f0f1)^{p_k} f1
    (f0f1)^{tail}: eps1 = 1, eps2 = 0, exponents below n-1, tail at most
    n-1.  The closed-form run pattern is compared against direct transducer
    application.
    """
    if not isinstance(nf, General) or nf.eps1 != 1 or nf.eps2 != 0:
        raise ValueError("element must have the f0 f1 ... (f0f1)^tail shape")
    if n < 1:
        raise ValueError("level must be >= 1")
    exps = nf.exponents
    if exps and exps[-1] >= n - 1:
        raise ValueError("exponents must be below n-1")
    if nf.tail > n - 1:
        raise ValueError("tail must be at most n-1")
    if not exps:
        pattern = (0,) * n
    else:
        runs = [exps[0] + 1]
        runs += [exps[i] - exps[i - 1] for i in range(1, len(exps))]
        runs.append(n - exps[-1] - 1)
        pattern = tuple(
            letter for i, r in enumerate(runs) for letter in [i % 2] * r
        )
    direct = apply_word(nf_to_word(nf), (0,) * n)
    assert direct == pattern, "closed form disagrees with transducer application"
    return pattern


def width(word) -> int:
    """Spread of the alternating partial sums of f1-block sizes.

    Blocks are maximal groups of f1's separated by odd runs of f0's; an
    even f0-run (including none) closes a block.  Invariant under all
    defining relations; zero exactly for powers of f0.
    """
    word = tuple(word)
    ones = word.count(1)
    if ones == 0:
        return 0
    run = 0
    seen_one = False
    blocks = []
    current = 0
    for c in word:
        if c == 1:
            if not seen_one:
                seen_one = True
                current = 1
            elif run % 2 == 1:
                current += 1
            else:
                blocks.append(current)
                current = 1
            run = 0
        else:
            if seen_one:
                run += 1
    blocks.append(current)
    sums = [0]
    total = 0
    for i, b in enumerate(blocks):
        total += b if i % 2 == 0 else -b
        sums.append(total)
    return max(sums) - min(sums)


def _distinct_odd_exponent_sets(total, min_exp=0):
    """Strictly increasing exponent tuples p with sum(2p+1) == total."""
    if total == 0:
        yield ()
        return
    e = min_exp
    while 2 * e + 1 <= total:
        for rest in _distinct_odd_exponent_sets(total - (2 * e + 1), e + 1):
            yield (e,) + rest
        e += 1


def normal_forms_of_length(n: int):
    """All normal forms whose canonical word has exactly n letters."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if n == 0:
        yield ONE
        return
    if n == 1:
        yield F0
    for eps1 in (0, 1):
        for eps2 in (0, 1):
            rest = n - eps1 - eps2 - 1
            tail = 0
            while 2 * tail <= rest:
                for exps in _distinct_odd_exponent_sets(rest - 2 * tail):
                    yield General(eps1, exps, tail, eps2)
                tail += 1


def enumerate_normal_forms(n: int) -> int:
    """Number of canonical words of length exactly n (the word growth)."""
    return sum(1 for _ in normal_forms_of_length(n))
