"""
Packed path masks for fast pairwise consistency.

Every packable feature (boolean, categorical, small integer range) owns a
segment of the mask: one bit per domain value plus a guard bit on top. A
path sets the bits of the values it allows. For two paths, adding the
per-segment constant 2^k - 1 to `a & b` carries into the guard bit exactly
when the segment is non-empty, so one AND, one addition and one comparison
decide consistency of all packed features at once. Features that cannot be
packed (real ranges, wide integer ranges) are checked per domain.
"""

from dataclasses import dataclass

from model.assignment import Schema
from model.domains import DomainKind
from model.tree import Path

MAX_PACKED_VALUES = 64

ONE = ord('1')
ZERO = ord('0')


@dataclass(frozen=True)
class Segment:
    offset: int
    values: tuple


class PathPacker:
    def __init__(self, schema: Schema):
        self.segments: dict = {}
        self.unpacked: list = []
        self.fill = 0
        self.guards = 0
        offset = 0
        for f in schema:
            packable = f.is_valued or (
                f.kind == DomainKind.ORDINAL_INT and f.size <= MAX_PACKED_VALUES)
            if not packable:
                self.unpacked.append(f.id)
                continue
            values = tuple(f.iter_values())
            k = len(values)
            self.segments[f.id] = Segment(offset, values)
            self.fill |= ((1 << k) - 1) << offset
            self.guards |= 1 << (offset + k)
            offset += k + 1
        self.nbits = offset
        # most significant bit first, as int(..., 2) reads it
        self.template = bytearray(format(self.fill, f'0{offset}b'), 'ascii') if offset else bytearray()

    def mask(self, path: Path) -> int:
        if not self.nbits:
            return 0
        bits = bytearray(self.template)
        top = self.nbits - 1
        for fid, dom in path.domains.items():
            seg = self.segments.get(fid)
            if seg is None:
                continue
            for i, v in enumerate(seg.values):
                bits[top - seg.offset - i] = ONE if dom.contains(v) else ZERO
        return int(bits, 2)

    def residual(self, path: Path) -> dict:
        """Domains of the path on features outside the packed mask."""
        return {fid: path.domains[fid] for fid in self.unpacked if fid in path.domains}

    def consistent(self, a: int, b: int) -> bool:
        return ((a & b) + self.fill) & self.guards == self.guards
