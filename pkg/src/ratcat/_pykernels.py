"""Pure-Python path kernels.

Same signatures and results as the compiled ``_ckernels`` module; see
``ratcat.kernels`` for the selection logic.  Paths are step strings over
"NE"; ``nx`` is the tuple of x-coordinates of the north steps, bottom first.
A laser fired from (i, j) is described by its end height h and the integer
numerator ``num = a*i + b*(h - j)`` of its end abscissa num/a.
"""


def first_violation(steps, a, b):
    """Index of the first interior point with b*y <= a*x, or -1."""
    x = y = 0
    n = len(steps)
    for t in range(n - 1):
        if steps[t] == "N":
            y += 1
        else:
            x += 1
        if b * y <= a * x:
            return t + 1
    return -1


def enumerate_nx(a, b):
    """North-step abscissae of all (a,b)-Dyck paths, lex order on the partition."""
    bounds = [0] + [(h * b - 1) // a for h in range(1, a)]
    out = []
    nx = [0] * a

    def fill(h, cap):
        # h runs from a-1 down to 1; lambda_i = nx[a-i]
        if h == 0:
            out.append(tuple(nx))
            return
        for v in range(0, min(cap, bounds[h]) + 1):
            nx[h] = v
            fill(h - 1, v)

    fill(a - 1, b)
    return out


def laser_end(nx, a, b, i, j):
    """End (h, num) of the laser from (i, j); h == -1 flags a broken invariant."""
    base = a * i
    for h in range(j + 1, a + 1):
        num = base + b * (h - j)
        leave = nx[h] if h < a else b
        if num < a * leave:
            if num <= a * nx[h - 1]:
                return -1, num
            return h, num
    return -1, 0


def laser_ends(nx, a, b):
    """Laser ends for every non-origin north-step bottom, bottom to top."""
    return [laser_end(nx, a, b, nx[k], k) for k in range(1, a)]


def assign_regions(lasers, points, a, b):
    """For each labeled point, index of the highest laser strictly below it.

    ``lasers`` holds (sx, sy, num) triples; -1 means the base diagonal.
    """
    out = []
    for x, y in points:
        best = -1
        best_val = -1
        ax = a * x
        by = b * y
        for k, (sx, sy, num) in enumerate(lasers):
            if sx <= x and ax < num:
                val = b * sy + a * (x - sx)
                if val < by and val > best_val:
                    best_val = val
                    best = k
        out.append(best)
    return out


def _valid(steps, a, b):
    return first_violation(steps, a, b) < 0


def promote(steps, a, b):
    """Promotion: sweep internal points SW to NE, swapping corners when still Dyck."""
    s = list(steps)
    n = len(s)
    # point t sits between steps t-1 and t; track its coordinates incrementally
    x = y = 0
    for t in range(1, n):
        if s[t - 1] == "N":
            y += 1
        else:
            x += 1
        if s[t - 1] != s[t]:
            if s[t - 1] == "N":
                # NE -> EN moves point t from (x, y) to (x+1, y-1)
                ok = b * (y - 1) > a * (x + 1)
                if ok:
                    s[t - 1], s[t] = "E", "N"
                    x += 1
                    y -= 1
            else:
                # EN -> NE always stays above the diagonal
                s[t - 1], s[t] = "N", "E"
                x -= 1
                y += 1
    return "".join(s)


def rectify_offset(word, a, b):
    """Offset k such that word[k:] + word[:k] is a Dyck vertical run word, or -1."""
    n = len(word)
    for k in range(n):
        s = 0
        ok = True
        for t in range(1, n):
            s += word[(k + t - 1) % n]
            if b * s <= a * t:
                ok = False
                break
        if ok:
            return k
    return -1
