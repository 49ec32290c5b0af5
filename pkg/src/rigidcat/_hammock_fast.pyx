# cython: boundscheck=False, wraparound=False
"""Compiled hammock dimension recursion.  Same contract as the pure
Python kernel in _hammock_pure; selected at import time in mesh.py."""


def hammock_grid(int n_slices, int rank, long[:] same_in_idx,
                 long[:] same_in_off, long[:] prev_in_idx,
                 long[:] prev_in_off, long[:] corr_slices, long[:] corr_pos):
    cdef list f = [[0] * rank for _ in range(n_slices)]
    cdef long[:, :] grid
    import array
    buf = array.array("l", [0]) * (n_slices * rank)
    grid = memoryview(buf).cast("l", (n_slices, rank))
    cdef int s, i
    cdef long t, val
    cdef int n_corr = corr_slices.shape[0]
    for s in range(n_slices):
        for i in range(rank):
            val = 0
            for t in range(same_in_off[i], same_in_off[i + 1]):
                val += grid[s, same_in_idx[t]]
            if s > 0:
                for t in range(prev_in_off[i], prev_in_off[i + 1]):
                    val += grid[s - 1, prev_in_idx[t]]
                val -= grid[s - 1, i]
            for t in range(n_corr):
                if corr_slices[t] == s and corr_pos[t] == i:
                    val += 1
            if val < 0:
                raise AssertionError(
                    "negative hammock value at slice %d position %d" % (s, i))
            grid[s, i] = val
    for s in range(n_slices):
        for i in range(rank):
            f[s][i] = grid[s, i]
    return f
