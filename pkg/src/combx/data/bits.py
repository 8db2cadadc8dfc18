def mask_of(points):
    """
    Packs an iterable of point indices into a bitmask.

    Args:
        points (:python:`Iterable[int]`): Point indices.

    Returns:
        :python:`int`: The bitmask with bit :python:`i` set for each given point :python:`i`.
    """
    mask = 0
    for i in points:
        mask |= 1 << int(i)
    return mask


def iter_bits(mask):
    """
    Yields the indices of the set bits of :python:`mask` in increasing order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask):
    return list(iter_bits(mask))


def popcount(mask):
    return bin(mask).count("1")
