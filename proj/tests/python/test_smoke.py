# Copyright 2026 the greedylab authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the python module: a thin pass over each exposed surface."""

import math
import sys

import greedylab as gl


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def main():
    # Norms.
    l2 = gl.SymSpace.lp(2.0)
    assert approx(l2.norm([3.0, 4.0]), 5.0)
    lor = gl.SymSpace.lorentz(1.0, gl.Weight.explicit_list([1.0, 0.5, 1 / 3]))
    assert approx(lor.norm([3.0, 1.0, 2.0]), 13.0 / 3.0)
    weak = gl.SymSpace.weak_lorentz(gl.Weight.explicit_list([1.0, 1.0, 1.0]))
    assert approx(weak.norm([3.0, 1.0, 2.0]), 4.0)
    v1 = gl.SymSpace.variation()
    assert approx(v1.norm([1.0, 3.0, 2.0]), 6.0)
    assert gl.rearrange_nonincreasing([0.0, -2.0, 1.0]) == [2.0, 1.0, 0.0]
    assert approx(l2.fundamental_lambda(9), 3.0)

    # Dual bounds.
    dual = gl.dual_norm_lb(l2, [3.0, 4.0])
    assert dual.exact and approx(dual.value, 5.0)

    # Regularity toolkit.
    assert gl.check_lrp(lambda m: math.sqrt(m), 64, 2000) == 4
    assert gl.check_urp(lambda m: math.sqrt(m), 64, 2000) == 4
    assert gl.check_urp(lambda m: float(m), 64, 2000) is None
    assert gl.dini_constant(lambda m: math.sqrt(m), 2000) <= 2.0

    # Lift / retraction.
    assert gl.lifting_L([1.0, 2.0]) == [1.0, 0.0, 2.0, 0.0]
    assert gl.retraction_T([1.0, 0.0, 2.0, 0.0]) == [1.0, 2.0]

    # Bases and exact projection norms.
    summing = gl.summing_basis()
    assert approx(summing.norm([1.0, -1.0, 1.0, -1.0]), 1.0)
    diff = gl.difference_basis()
    assert approx(diff.norm([1.0, 1.0]), 1.0)
    r = gl.proj_operator_norm(diff, [1], 2)
    assert r.exact and approx(r.value, 2.0)
    l4 = gl.compute_L_m(summing, 4, True)
    assert l4.exact and l4.value >= 2.0

    # Gauge space.
    y = gl.GaugeSpace(summing, l2, gl.Partition.dyadic(5))
    assert y.dim() == 31
    f = gl.block_witness_vector(y, [1.0, -1.0, 1.0, -1.0, 1.0])
    assert approx(y.norm(f), summing.norm([1.0, -1.0, 1.0, -1.0, 1.0]))
    emb = y.embedding_check(f)
    assert emb.lower_ok and emb.upper_ok
    c = y.constants()
    assert c.applicable and approx(c.kappa, 2.0)
    w = gl.gauge_witness_lower_bound(y, 4)
    exact4 = gl.compute_L_m(summing, 4, True)
    assert approx(w.value, exact4.value)

    # Greedy machinery.
    assert gl.greedy_set([1.0, -2.0, 3.0], 2) == [1, 2]
    est = gl.qg_ratio_estimate(l2, 12, 50, 3)
    assert est.max_residual_ratio <= 1.0 + 1e-12
    phi = gl.fundamental_phi(l2, 4, 12)
    assert phi.exact and approx(phi.value, 2.0)
    est_y = gl.qg_ratio_estimate_gauge(y, y.dim(), 50, 3)
    assert est_y.max_residual_ratio >= 1.0 - 1e-12

    # Inequality sweeps.
    avg = gl.averaging_projection_sweep(l2, gl.Partition.dyadic(6), 63, 100, 5)
    assert avg.violations == 0
    assert gl.roundtrip_sweep(y, 50).violations == 0
    assert gl.tail_projection_sweep(y, 50).violations == 0

    print("python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
