import zlib

import numpy as np

from rieszsup.workflows import InstanceBuilder, suite_stream, trial_rng
from rieszsup.workflows.generators import PROBABILITIES


def test_trial_rng_is_reproducible():
    """
    Tests that a trial generator depends only on seed, stream and trial.
    """
    def draw(*key):
        return trial_rng(*key).integers(0, 2**32, size=4).tolist()

    assert draw(7, 11, 3) == draw(7, 11, 3)
    assert draw(7, 11, 3) != draw(7, 11, 4)
    assert draw(7, 11, 3) != draw(8, 11, 3)


def test_suite_stream_is_stable():
    """
    Tests that stream ids do not depend on the interpreter's hash seed.
    """
    assert suite_stream("M7-cert") == zlib.crc32(b"M7-cert")
    assert suite_stream("YY2-A") != suite_stream("YY2-B")


def test_builder_draws_valid_instances():
    """
    Tests that drawn values satisfy the preconditions of their consumers.
    """
    for trial in range(50):
        gen = InstanceBuilder(np.random.default_rng([3, trial]), max_dim=4)
        d = gen.dim()
        assert 1 <= d <= 4
        assert gen.cone(d).is_cone()
        assert gen.finite(d).is_finite()
        assert len(gen.periodic(d).cycle) >= 1
        assert gen.decreasing_grid(d).is_decreasing()
        t = gen.cond_exp(d)
        assert sorted(i for b in t.partition for i in b) == list(range(d))
        assert t.is_block_constant(gen.block_constant(t, cone=False))
        seq = gen.weighted_seq(t)
        assert seq.dim == d
        ps = gen.probabilities(3, constant=True)
        assert len(set(ps)) == 1 and ps[0] in PROBABILITIES
