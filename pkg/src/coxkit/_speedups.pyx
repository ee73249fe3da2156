# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the pure-Python word kernel.

Identical semantics and API; the braid-closure scan runs on C char
buffers instead of Python-level slicing.
"""
from collections import deque

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_GET_SIZE

from coxkit.wordcore.pure import ClosureBudgetError

IMPLEMENTATION = "compiled"


cdef inline Py_ssize_t _adjacent_pair(const char *w, Py_ssize_t n) noexcept:
    cdef Py_ssize_t i
    for i in range(n - 1):
        if w[i] == w[i + 1]:
            return i
    return -1


cdef class WordKernel:
    cdef public tuple entries
    cdef public long budget
    cdef dict _pats
    cdef int _rank

    def __init__(self, entries, budget=100_000):
        self.entries = tuple(tuple(r) for r in entries)
        self.budget = budget
        self._pats = {}
        cdef int rank = len(self.entries)
        cdef int a, b, m, i
        for a in range(rank):
            for b in range(rank):
                if a != b and self.entries[a][b] >= 2:
                    m = self.entries[a][b]
                    left = bytes([(a, b)[i % 2] for i in range(m)])
                    right = bytes([(b, a)[i % 2] for i in range(m)])
                    self._pats[a * rank + b] = (left, right)
        self._rank = rank

    cdef tuple _scan(self, bytes word):
        cdef dict pats = self._pats
        cdef int rank = self._rank
        cdef long budget = self.budget
        cdef set seen = {word}
        cdef Py_ssize_t n, i, j, m
        cdef const char *cw
        cdef const char *cl
        cdef bint match
        queue = deque((word,))
        while queue:
            w = <bytes> queue.popleft()
            n = PyBytes_GET_SIZE(w)
            cw = PyBytes_AS_STRING(w)
            if _adjacent_pair(cw, n) >= 0:
                return ("pair", w)
            for i in range(n - 1):
                pat = pats.get(cw[i] * rank + cw[i + 1])
                if pat is None:
                    continue
                left = <bytes> (<tuple> pat)[0]
                m = PyBytes_GET_SIZE(left)
                if i + m > n:
                    continue
                cl = PyBytes_AS_STRING(left)
                match = True
                for j in range(m):
                    if cw[i + j] != cl[j]:
                        match = False
                        break
                if not match:
                    continue
                nb = w[:i] + (<tuple> pat)[1] + w[i + m:]
                if nb not in seen:
                    if len(seen) >= budget:
                        raise ClosureBudgetError(
                            f"braid closure exceeded budget of {budget} words")
                    seen.add(nb)
                    queue.append(nb)
        return ("closed", seen)

    def is_reduced(self, word):
        kind, _ = self._scan(bytes(word))
        return kind == "closed"

    def reduce(self, word):
        cdef bytes w = bytes(word)
        cdef Py_ssize_t i
        while True:
            kind, payload = self._scan(w)
            if kind == "closed":
                return w
            i = _adjacent_pair(PyBytes_AS_STRING(<bytes> payload),
                               PyBytes_GET_SIZE(<bytes> payload))
            w = (<bytes> payload)[:i] + (<bytes> payload)[i + 2:]

    def shortlex(self, word):
        w = self.reduce(word)
        _, seen = self._scan(w)
        return min(seen) if seen else b""

    def shortlex_of_reduced(self, word):
        kind, seen = self._scan(bytes(word))
        if kind != "closed":
            raise ValueError("word is not reduced")
        return min(seen)
