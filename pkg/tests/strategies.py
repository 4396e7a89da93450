from hypothesis import strategies as st

from littlewood.partitions import Partition


@st.composite
def partitions(draw, max_size=10):
    n = draw(st.integers(0, max_size))
    parts = []
    remaining = n
    while remaining:
        part = draw(st.integers(1, min(remaining, parts[-1] if parts else remaining)))
        parts.append(part)
        remaining -= part
    return Partition(parts)
