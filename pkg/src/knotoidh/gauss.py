"""Gauss diagrams of knotoids: parsing, serialization, basic symmetries.

A diagram with k chords is a sequence of 2k events along the oriented
segment, two per chord: the Over passage and the Under passage.  Chords
are directed Over -> Under and carry a sign, or are marked singular with
`*` when the crossing is a double point.

Code grammar: whitespace-separated tokens `O<id><tag>` / `U<id><tag>`,
tag in {+, -} required on O tokens and optional (but matching) on U
tokens; singular chords use `*` instead, e.g. `O3* U3*`.  Chord ids must
be exactly 1..k.  The empty code is the trivial diagram.
"""

from __future__ import annotations

import random
import re
from collections import namedtuple
from dataclasses import dataclass
from importlib import resources

__all__ = [
    "SINGULAR",
    "GaussCodeError",
    "Event",
    "ChordView",
    "GaussDiagram",
    "parse_gauss_code",
    "serialize",
    "reverse",
    "mirror",
    "crossing_change",
    "random_diagram",
    "random_nested_diagram",
    "from_chord_positions",
    "parse_gko",
    "load_gko",
    "bundled_diagrams",
]

# Sign value marking a singular (double-point) chord.
SINGULAR = 0


class GaussCodeError(ValueError):
    """Raised for malformed codes and structurally invalid diagrams."""


Event = namedtuple("Event", ["chord", "kind", "sign"])

ChordView = namedtuple("ChordView", ["id", "over_pos", "under_pos", "sign"])

_TOKEN = re.compile(r"([OU])([0-9]+)([+\-*]?)\Z")

_TAGS = {"+": 1, "-": -1, "*": SINGULAR}
_TAG_OF = {1: "+", -1: "-", SINGULAR: "*"}


def _validate(events):
    seen = {}
    for pos, ev in enumerate(events, start=1):
        if ev.kind not in ("O", "U"):
            raise GaussCodeError("event at position %d has kind %r" % (pos, ev.kind))
        if ev.sign not in (1, -1, SINGULAR):
            raise GaussCodeError("chord %d has sign %r" % (ev.chord, ev.sign))
        slot = seen.setdefault(ev.chord, {})
        if ev.kind in slot:
            raise GaussCodeError("duplicate %s token for chord %d" % (ev.kind, ev.chord))
        slot[ev.kind] = ev
    for cid, slot in seen.items():
        if len(slot) != 2:
            raise GaussCodeError("chord %d is missing its %s token"
                                 % (cid, "U" if "O" in slot else "O"))
        if slot["O"].sign != slot["U"].sign:
            raise GaussCodeError("chord %d: sign mismatch between O and U tokens" % cid)
    k = len(seen)
    if seen and sorted(seen) != list(range(1, k + 1)):
        raise GaussCodeError("chord ids must be exactly 1..%d, got %s" % (k, sorted(seen)))


@dataclass(frozen=True)
class GaussDiagram:
    """Immutable event sequence; positions are 1-based indices into it."""

    events: tuple

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        _validate(self.events)

    @property
    def k(self) -> int:
        return len(self.events) // 2

    def chords(self) -> dict:
        """Map chord id -> ChordView with 1-based endpoint positions."""
        over = {}
        under = {}
        sign = {}
        for pos, ev in enumerate(self.events, start=1):
            (over if ev.kind == "O" else under)[ev.chord] = pos
            sign[ev.chord] = ev.sign
        return {cid: ChordView(cid, over[cid], under[cid], sign[cid]) for cid in sign}

    def chord(self, cid: int) -> ChordView:
        try:
            return self.chords()[cid]
        except KeyError:
            raise GaussCodeError("no chord with id %d" % cid) from None

    def singular_ids(self) -> tuple:
        return tuple(sorted({ev.chord for ev in self.events if ev.sign == SINGULAR}))

    def __str__(self) -> str:
        return serialize(self)


def from_chord_positions(chords) -> GaussDiagram:
    """Build a diagram from (over_pos, under_pos, sign) triples.

    Positions must form a permutation of 1..2k; ids are assigned 1..k in
    input order.
    """
    chords = list(chords)
    events = {}
    for i, (over, under, sign) in enumerate(chords, start=1):
        events[over] = Event(i, "O", sign)
        events[under] = Event(i, "U", sign)
    if sorted(events) != list(range(1, 2 * len(chords) + 1)):
        raise GaussCodeError("endpoint positions must be a permutation of 1..2k")
    return GaussDiagram(tuple(events[p] for p in sorted(events)))


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a Gauss code string; see the module grammar."""
    signs = {}
    entries = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise GaussCodeError("malformed token %r" % tok)
        kind, cid, tag = m.group(1), int(m.group(2)), m.group(3)
        if cid == 0:
            raise GaussCodeError("malformed token %r: chord ids start at 1" % tok)
        if kind == "O":
            if not tag:
                raise GaussCodeError("token %r: O tokens need a sign or *" % tok)
            if cid in signs and signs[cid] is not None and signs[cid] != _TAGS[tag]:
                raise GaussCodeError("chord %d: sign mismatch between O and U tokens" % cid)
            signs[cid] = _TAGS[tag]
        elif tag:
            prev = signs.get(cid)
            if prev is not None and prev != _TAGS[tag]:
                raise GaussCodeError("chord %d: sign mismatch between O and U tokens" % cid)
            signs.setdefault(cid, _TAGS[tag])
        else:
            signs.setdefault(cid, None)
        entries.append((kind, cid))
    unsigned = sorted(cid for cid, s in signs.items() if s is None)
    if unsigned:
        raise GaussCodeError("chord %d has no sign on either token" % unsigned[0])
    return GaussDiagram(tuple(Event(cid, kind, signs[cid]) for kind, cid in entries))


def serialize(d: GaussDiagram) -> str:
    """Canonical code: every token carries its tag, on U tokens too."""
    return " ".join("%s%d%s" % (ev.kind, ev.chord, _TAG_OF[ev.sign]) for ev in d.events)


def reverse(d: GaussDiagram) -> GaussDiagram:
    """Reverse the segment orientation: event order flips, signs stay."""
    return GaussDiagram(tuple(reversed(d.events)))


def mirror(d: GaussDiagram) -> GaussDiagram:
    """Swap Over/Under at every crossing and negate all signs in place."""
    return GaussDiagram(tuple(
        Event(ev.chord, "U" if ev.kind == "O" else "O", -ev.sign) for ev in d.events
    ))


def crossing_change(d: GaussDiagram, cid: int) -> GaussDiagram:
    """Switch one crossing: flip the chord's direction and its sign."""
    view = d.chord(cid)
    if view.sign == SINGULAR:
        raise GaussCodeError("chord %d is singular; resolve it first" % cid)
    return GaussDiagram(tuple(
        Event(ev.chord, "U" if ev.kind == "O" else "O", -ev.sign)
        if ev.chord == cid else ev
        for ev in d.events
    ))


def random_diagram(k: int, seed: int) -> GaussDiagram:
    """Seed-deterministic diagram, uniform over pairings, signs, directions."""
    if k < 0:
        raise ValueError("k must be non-negative")
    rng = random.Random(seed)
    positions = list(range(1, 2 * k + 1))
    rng.shuffle(positions)
    chords = []
    for i in range(k):
        a, b = positions[2 * i], positions[2 * i + 1]
        if rng.random() < 0.5:
            a, b = b, a
        chords.append((a, b, rng.choice((1, -1))))
    return from_chord_positions(chords)


def random_nested_diagram(k: int, seed: int) -> GaussDiagram:
    """Seeded diagram whose chords are pairwise nested or disjoint.

    No two chords interleave, so every degree is 0 and H vanishes; used
    to exercise the zero-height side of the certificate.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    rng = random.Random(seed)
    spans = []

    def fill(lo, count):
        # lay `count` chords inside positions lo..lo+2*count-1
        while count:
            inner = rng.randrange(count)  # chords nested under this one
            spans.append((lo, lo + 2 * inner + 1))
            fill(lo + 1, inner)
            lo += 2 * inner + 2
            count -= inner + 1

    fill(1, k)
    chords = []
    for a, b in spans:
        if rng.random() < 0.5:
            a, b = b, a
        chords.append((a, b, rng.choice((1, -1))))
    return from_chord_positions(chords)


def parse_gko(text: str) -> list:
    """Parse a .gko collection: `name: code` lines, # comments, blanks."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, code = line.partition(":")
        name = name.strip()
        if not sep or not name:
            raise GaussCodeError("line %d: expected `name: code`" % lineno)
        try:
            out.append((name, parse_gauss_code(code)))
        except GaussCodeError as exc:
            raise GaussCodeError("line %d (%s): %s" % (lineno, name, exc)) from None
    return out


def load_gko(path) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_gko(fh.read())


def bundled_diagrams() -> dict:
    """Named reference diagrams shipped with the package."""
    text = resources.files(__package__).joinpath("data/paper_fixtures.gko").read_text()
    return dict(parse_gko(text))
