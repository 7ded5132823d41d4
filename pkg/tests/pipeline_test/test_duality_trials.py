'''
Test of the S0 duality
======================

For a in l1 the supremum of |<a, x>| over S0 is the sup norm of f_a on the
disk. Seeded random sparse series are searched over geometric moment
vectors and random convex combinations; none may exceed the upper bound of
the sup norm bracket.
'''

import json

from rajchmanpy.cli import main, EXIT_OK


def test_hundred_seeded_trials(capsys):
    code = main(['duality', '--trials', '100', '--seed', '7', '--max-degree', '64',
                 '--combinations', '500'])
    captured = capsys.readouterr()
    document = json.loads(captured.out)
    assert code == EXIT_OK
    assert 'violations: 0' in captured.err
    assert document['violations'] == 0
    rows = document['rows']
    assert len(rows['trial']) == 100
    assert max(rows['degree']) <= 64
    for best, lower, upper, resolution, combination in zip(
            rows['best'], rows['lower'], rows['upper'], rows['resolution'],
            rows['combination_max']):
        assert lower - resolution <= best <= upper * (1 + 1e-12)
        assert combination <= upper * (1 + 1e-12)


def test_trials_are_reproducible(capsys):
    argv = ['duality', '--trials', '20', '--seed', '7', '--combinations', '100']
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
