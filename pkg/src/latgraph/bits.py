"""Small helpers for subsets encoded as Python ints."""


def members(mask):
    """Yield the indices set in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(indices):
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def size(mask):
    return mask.bit_count()


def is_subset(x, y):
    return x & ~y == 0
