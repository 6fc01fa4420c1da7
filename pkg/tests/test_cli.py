import json

from click.testing import CliRunner

from tverbergkit import suites
from tverbergkit.cli import main, run
from tverbergkit.complex import chessboard
from tverbergkit.formats import complex_as_dict
from tverbergkit.suites import Check, PROJECTIVE_PLANE


def invoke(args, input=None, **kwargs):
    return CliRunner().invoke(main, args, input=input, **kwargs)


def always_fails():
    return True, False, False


def test_build_chessboard():
    result = invoke(['complex', 'build', 'chessboard', '--m', '2', '--n', '3'])

    assert result.exit_code == 0
    assert result.output == 'simplicial v1 6\n0 4\n0 5\n1 3\n1 5\n2 3\n2 4\n'


def test_build_chessboard_json():
    result = invoke(['complex', 'build', 'chessboard', '--m', '1', '--n', '2', '--json'])

    assert result.exit_code == 0
    assert json.loads(result.output) == json.loads(json.dumps(complex_as_dict(chessboard(1, 2))))


def test_build_missing_option():
    result = invoke(['complex', 'build', 'chessboard', '--m', '2'])

    assert result.exit_code == 2
    assert 'missing option(s): --n' in result.output


def test_build_deleted_join():
    result = invoke(['complex', 'build', 'deleted-join', '--input', '-', '--r', '2'], input='simplicial v1 2\n0 1\n')

    assert result.exit_code == 0
    assert result.output == 'simplicial v1 4\n0 1\n0 3\n1 2\n2 3\n'


def test_build_deleted_join_json_input():
    content = json.dumps({'vertex_count': 3, 'facets': [[0], [1], [2]]})

    result = invoke(['complex', 'build', 'deleted-join', '--input', '-'], input=content)

    assert result.exit_code == 0
    assert result.output == 'simplicial v1 6\n0 4\n0 5\n1 3\n1 5\n2 3\n2 4\n'


def test_build_join():
    runner = CliRunner()
    with runner.isolated_filesystem():
        with open('points.txt', 'w') as f:
            f.write('simplicial v1 2\n0\n1\n')

        result = runner.invoke(main, ['complex', 'build', 'join', '--input', 'points.txt', '--other', 'points.txt'])

    assert result.exit_code == 0
    assert result.output == 'simplicial v1 4\n0 2\n0 3\n1 2\n1 3\n'


def test_build_skeleton():
    result = invoke(['complex', 'build', 'skeleton', '--input', '-', '--dim', '1'], input='simplicial v1 3\n0 1 2\n')

    assert result.exit_code == 0
    assert result.output == 'simplicial v1 3\n0 1\n0 2\n1 2\n'


def test_build_witness():
    result = invoke(['complex', 'build', 'witness', '--d', '2', '--r', '3'])

    assert result.exit_code == 0
    assert result.output == 'points v1 2 6\n0 0\n0 0\n1 0\n1 0\n0 1\n0 1\n'


def test_build_malformed():
    content = 'simplicial v1 3\n0 1\n0 9\n'

    result = invoke(['complex', 'build', 'skeleton', '--input', '-', '--dim', '1'], input=content)

    assert result.exit_code == 2
    assert 'line 3: facet [0, 9] is not a set of vertices below 3' in result.output


def test_homology():
    result = invoke(['homology', '--input', '-'], input='simplicial v1 3\n0 1\n0 2\n1 2\n')

    assert result.exit_code == 0
    assert json.loads(result.output) == [
        {'degree': 0, 'betti': 1, 'torsion': []},
        {'degree': 1, 'betti': 1, 'torsion': []},
    ]


def test_homology_prime():
    content = 'simplicial v1 6\n' + ''.join(' '.join(map(str, facet)) + '\n' for facet in PROJECTIVE_PLANE)

    integral = invoke(['homology', '--input', '-'], input=content)
    modular = invoke(['homology', '--input', '-', '--prime', '2'], input=content)

    assert [group['torsion'] for group in json.loads(integral.output)] == [[], [2], []]
    assert [group['betti'] for group in json.loads(modular.output)] == [1, 1, 1]


def test_homology_not_prime():
    for prime in ('1', '4'):
        result = invoke(['homology', '--input', '-', '--prime', prime], input='simplicial v1 2\n0 1\n')

        assert result.exit_code == 2
        assert 'expected a prime, got {}'.format(prime) in result.output


def test_degree():
    result = invoke(['degree', '--prime', '3'])

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert abs(data['degree']) == 2
    assert data['factorial'] == 2


def test_degree_small_prime():
    result = invoke(['degree', '--prime', '2'])

    assert result.exit_code == 2


def test_degree_not_prime():
    result = invoke(['degree', '--prime', '4'])

    assert result.exit_code == 2
    assert 'expected a prime, got 4' in result.output


def test_radon():
    result = invoke(['radon', '--input', '-'], input='points v1 2 4\n0 0\n1 1\n1 0\n0 1\n')

    assert result.exit_code == 0
    assert json.loads(result.output) == {
        'parts': [[0, 1], [2, 3]],
        'point': ['1/2', '1/2'],
        'coefficients': [['1/2', '1/2'], ['1/2', '1/2']],
    }


def test_radon_arity():
    result = invoke(['radon', '--input', '-'], input='points v1 2 3\n0 0\n1 1\n1 0\n')

    assert result.exit_code == 2
    assert 'a Radon partition in dimension 2 needs 4 points, got 3' in result.output


def test_radon_malformed():
    result = invoke(['radon', '--input', '-'], input='points v1 2 4\n0 0\n1\n1 0\n0 1\n')

    assert result.exit_code == 2
    assert 'line 3: expected 2 coordinates, got 1' in result.output


def test_tverberg_none():
    result = invoke(['tverberg', '--input', '-', '--r', '3', '--exhaustive'],
                    input='points v1 2 6\n0 0\n0 0\n1 0\n1 0\n0 1\n0 1\n')

    assert result.exit_code == 0
    assert json.loads(result.output) == {'result': 'none'}


def test_tverberg_equal_coefficients():
    runner = CliRunner()
    with runner.isolated_filesystem():
        with open('colors.txt', 'w') as f:
            f.write('colors v1\n0 1\n2 3\n')

        result = runner.invoke(main, ['tverberg', '--input', '-', '--r', '2', '--colors', 'colors.txt',
                                      '--equal-coeffs'], input='points v1 1 4\n0\n2\n1\n3\n')

    assert result.exit_code == 0
    assert json.loads(result.output)['parts'] == [[0, 3], [1, 2]]
    assert json.loads(result.output)['point'] == ['3/2']


def test_tverberg_inconsistent():
    result = invoke(['tverberg', '--input', '-', '--r', '2', '--equal-coeffs'], input='points v1 1 3\n0\n1\n2\n')

    assert result.exit_code == 2
    assert 'equal coefficients are defined per color class and need a coloring' in result.output


def test_tverberg_exhaustive_limit():
    content = 'points v1 1 16\n' + ''.join('{}\n'.format(i) for i in range(16))

    result = invoke(['tverberg', '--input', '-', '--r', '2', '--exhaustive'], input=content)

    assert result.exit_code == 2
    assert '21457825 candidate families exceed the limit of 10000000' in result.output


def test_verify():
    result = invoke(['verify', 'degree-factorial', '--primes', '3,5'])

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['suite'] == 'degree-factorial'
    assert data['passed']
    assert [record['observed']['abs_degree'] for record in data['records'][:2]] == [2, 24]
    assert 'elapsed_ms' not in data['records'][0]


def test_verify_timing_human():
    result = invoke(['verify', 'collapse', '--human', '--timing'])

    assert result.exit_code == 0
    assert result.output.splitlines()[0].split() == ['id', 'result', 'expected', 'observed', 'ms']
    assert result.output.endswith('collapse: pass\n')


def test_verify_jobs_environment():
    result = invoke(['verify', 'lp-oracle', '--count', '10', '--seed', '3'], env={'TVERBERG_JOBS': '2'})

    assert result.exit_code == 0
    assert json.loads(result.output)['records'][0]['parameters']['seed'] == '3:lp-oracle:lp:0'


def test_verify_failure(monkeypatch):
    monkeypatch.setitem(suites.SUITES, 'collapse', lambda options: [Check('fails', always_fails, {})])

    result = invoke(['verify', 'collapse'])

    assert result.exit_code == 1
    assert json.loads(result.output)['passed'] is False


def test_verify_bad_primes():
    result = invoke(['verify', 'degree-factorial', '--primes', '3,x'])

    assert result.exit_code == 2
    assert 'expected comma-separated integers' in result.output


def test_verify_composite_primes():
    for value in ('4', '3,9', '2'):
        result = invoke(['verify', 'degree-factorial', '--primes', value])

        assert result.exit_code == 2
        assert 'expected primes of at least 3' in result.output


def test_verify_unknown_suite():
    result = invoke(['verify', 'everything'])

    assert result.exit_code == 2


def test_run(capsys):
    assert run(['degree', '--prime', '3']) == 0
    assert json.loads(capsys.readouterr().out)['prime'] == 3
    assert run(['verify', 'everything']) == 2
