"""scikit-learn style front end to the exact solver.

>>> est = EndSuperDomination().fit("cycle:8")
>>> est.value_, est.get_support(indices=True).tolist()
(4, [0, 1, 4, 5])
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .exceptions import InvalidGraphError
from .solver import Mode, enumerate_minimum_esd, solve
from .validation import check_cap, check_graph
from .verify import classify_roles


class EndSuperDomination(BaseEstimator):
    """Find a minimum dominating, super dominating or end super dominating set.

    Parameters
    ----------
    mode : {"esd", "super", "dom"}, default="esd"
        Which kind of set to minimise.
    cap : int, default=24
        Largest order the exact search accepts.
    enumerate_sets : bool, default=False
        In ``"esd"`` mode, also list every minimum set.

    Attributes
    ----------
    n_vertices_ : int
    value_ : int
        Minimum cardinality.
    support_ : ndarray of bool, shape (n_vertices_,)
        Membership mask of the lexicographically smallest optimal set.
    labels_ : ndarray of int, shape (n_vertices_,)
        ``support_`` as 0/1, mirroring transductive estimators.
    certificate_ : EsdCertificate or None
    roles_ : ndarray of str or None
        Vertex roles relative to the optimal set (``"esd"`` mode only).
    n_sets_ : int or None
    sets_ : list of list of int or None
    """

    def __init__(self, mode="esd", cap=24, enumerate_sets=False):
        self.mode = mode
        self.cap = cap
        self.enumerate_sets = enumerate_sets

    def fit(self, X, y=None):
        try:
            mode = Mode(self.mode)
        except ValueError:
            raise InvalidGraphError(f"mode must be one of 'esd', 'super', 'dom'; got {self.mode!r}") from None
        cap = check_cap(self.cap)
        g = check_graph(X)
        result = solve(g, mode, cap)
        self.n_vertices_ = g.n
        self.value_ = result.value
        self.support_ = np.zeros(g.n, dtype=bool)
        self.support_[result.witness_set.to_list()] = True
        self.labels_ = self.support_.astype(int)
        self.certificate_ = result.certificate
        self.roles_ = None
        self.n_sets_ = None
        self.sets_ = None
        if mode is Mode.ESD:
            roles = classify_roles(g, result.witness_set)
            self.roles_ = np.array([roles[v].value for v in range(g.n)])
            if self.enumerate_sets:
                enum = enumerate_minimum_esd(g, materialize=True, cap=cap)
                self.n_sets_ = enum.count
                self.sets_ = [s.to_list() for s in enum.sets]
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    def get_support(self, indices=False):
        check_is_fitted(self, "support_")
        return np.flatnonzero(self.support_) if indices else self.support_.copy()
