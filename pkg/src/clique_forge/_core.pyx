# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled recursive enumerators (boundary and multilayer families)."""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t
from libcpp.vector cimport vector


cdef extern from "_cliques.hpp" namespace "cf":
    ctypedef int (*EmitFn)(void* ctx, const int32_t* nodes, int k, int64_t edge_idx)

    cdef cppclass RunResult:
        vector[uint64_t] counts
        uint64_t state_entries
        uint64_t state_keys
        int status
        int64_t bad_edge

    RunResult boundary_recursive(const int32_t* u, const int32_t* v, int64_t m, int32_t n_nodes,
                                 int d_max, EmitFn emit, void* ctx) nogil
    RunResult multilayer_recursive(const int32_t* u, const int32_t* v, int64_t m, int32_t n_nodes,
                                   int d_max, EmitFn emit, void* ctx) nogil


cdef class _Emitter:
    cdef object callback
    cdef object labels
    cdef object error

    def __cinit__(self, callback, labels):
        self.callback = callback
        self.labels = labels
        self.error = None


cdef int _emit(void* ctx, const int32_t* nodes, int k, int64_t edge_idx) noexcept with gil:
    cdef _Emitter em = <_Emitter>ctx
    cdef int i
    labels = em.labels
    try:
        em.callback(tuple([labels[nodes[i]] for i in range(k)]), edge_idx)
    except BaseException as exc:
        em.error = exc
        return 1
    return 0


def _run(int which, u, v, int n_nodes, int d_max, callback=None, labels=None):
    cdef const int32_t[::1] uu = np.ascontiguousarray(u, dtype=np.int32)
    cdef const int32_t[::1] vv = np.ascontiguousarray(v, dtype=np.int32)
    cdef int64_t m = uu.shape[0]
    cdef RunResult res
    cdef _Emitter em = None
    cdef EmitFn fn = NULL
    cdef void* ctx = NULL
    cdef const int32_t* up = NULL
    cdef const int32_t* vp = NULL
    if m > 0:
        up = &uu[0]
        vp = &vv[0]
    if callback is not None:
        em = _Emitter(callback, labels)
        fn = _emit
        ctx = <void*>em
        if which == 0:
            res = boundary_recursive(up, vp, m, n_nodes, d_max, fn, ctx)
        else:
            res = multilayer_recursive(up, vp, m, n_nodes, d_max, fn, ctx)
        if em.error is not None:
            raise em.error
    else:
        with nogil:
            if which == 0:
                res = boundary_recursive(up, vp, m, n_nodes, d_max, fn, ctx)
            else:
                res = multilayer_recursive(up, vp, m, n_nodes, d_max, fn, ctx)
    return {
        "counts": [int(c) for c in res.counts],
        "state_entries": int(res.state_entries),
        "state_keys": int(res.state_keys),
        "status": res.status,
        "bad_edge": int(res.bad_edge),
    }


def boundary(u, v, int n_nodes, int d_max, callback=None, labels=None):
    return _run(0, u, v, n_nodes, d_max, callback, labels)


def multilayer(u, v, int n_nodes, int d_max, callback=None, labels=None):
    return _run(1, u, v, n_nodes, d_max, callback, labels)
