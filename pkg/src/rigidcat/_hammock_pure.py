"""Pure Python hammock dimension recursion (fallback kernel).

The grid f[s][i] holds dim Hom(X, Z) for Z the vertex at topological
position i of slice p_min + s.  Recursion over the mesh ending at Z:

    f(Z) = sum over middles f(M) - f(tau Z) + [Z = X] + [Z = Sigma X]

Adjacency is passed flattened (indices + offsets) so the compiled kernel
can use the identical layout.
"""


def hammock_grid(n_slices, rank, same_in_idx, same_in_off,
                 prev_in_idx, prev_in_off, corr_slices, corr_pos):
    f = [[0] * rank for _ in range(n_slices)]
    n_corr = len(corr_slices)
    for s in range(n_slices):
        row = f[s]
        prev = f[s - 1] if s > 0 else None
        for i in range(rank):
            val = 0
            for t in range(same_in_off[i], same_in_off[i + 1]):
                val += row[same_in_idx[t]]
            if prev is not None:
                for t in range(prev_in_off[i], prev_in_off[i + 1]):
                    val += prev[prev_in_idx[t]]
                val -= prev[i]
            for t in range(n_corr):
                if corr_slices[t] == s and corr_pos[t] == i:
                    val += 1
            if val < 0:
                raise AssertionError(
                    "negative hammock value at slice %d position %d" % (s, i))
            row[i] = val
    return f
