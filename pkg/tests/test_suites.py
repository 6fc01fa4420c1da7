import logging
import random
from collections import OrderedDict

from tverbergkit.exceptions import NotFree
from tverbergkit.models import Coloring, PartitionCertificate, SearchConstraints
from tverbergkit.suites import (DEFAULT_PRIMES, SUITES, Check, CheckRecord, Options, Report, _batches, _execute,
                                random_complex, random_configuration, run_suite, satisfies)


def raise_not_free():
    raise NotFree('the action fixes a vertex')


def test_suites():
    assert list(SUITES) == [
        'chessboard-connectivity',
        'deleted-join-iso',
        'deleted-product-connectivity',
        'degree-factorial',
        'radon-random',
        'tverberg-random',
        'witness-none',
        'colored',
        'soberon',
        'collapse',
        'quotient-euler',
        'snf-props',
        'lp-oracle',
    ]


def test_suite_checks():
    options = Options('chessboard-connectivity', 0, None, DEFAULT_PRIMES, False)

    checks = SUITES['chessboard-connectivity'](options)

    assert len(checks) == 51
    assert checks[0].id == 'homology-2x3'
    assert checks[-1].id == 'chessboard-7x7'
    assert checks[-1].parameters == {'m': 7, 'n': 7}


def test_batches():
    options = Options('radon-random', 3, 120, DEFAULT_PRIMES, False)

    assert list(_batches(options, 'batch', 1000, 50)) == [
        ('batch-000', '3:radon-random:batch:0', 50),
        ('batch-001', '3:radon-random:batch:1', 50),
        ('batch-002', '3:radon-random:batch:2', 20),
    ]


def test_random_configuration():
    P = random_configuration(random.Random('seed'), 2, 5)
    Q = random_configuration(random.Random('seed'), 2, 5)

    assert P == Q
    assert len(P) == 5
    assert all(c.denominator == 1 and -100 <= c <= 100 for point in P for c in point)


def test_random_complex():
    K = random_complex(random.Random('seed'))

    assert 1 <= K.vertex_count <= 4
    assert K.vertices == list(range(K.vertex_count))


def test_execute():
    record = _execute(Check('fails', raise_not_free, {}))

    assert record.id == 'fails'
    assert record.expected is None
    assert record.observed == 'error: NotFree: the action fixes a vertex'
    assert not record.passed


def test_report():
    obj = Report('demo', [CheckRecord('a', {}, 1, 1, True, 0.0015)])

    assert obj.passed
    assert obj.as_dict() == OrderedDict([
        ('suite', 'demo'),
        ('passed', True),
        ('records', [OrderedDict([
            ('id', 'a'),
            ('parameters', {}),
            ('expected', 1),
            ('observed', 1),
            ('passed', True),
        ])]),
    ])
    assert obj.as_dict(timing=True)['records'][0]['elapsed_ms'] == 1.5
    assert obj.human() == 'id  result  expected  observed\na   pass    1         1\ndemo: pass\n'


def test_report_failure():
    obj = Report('demo', [
        CheckRecord('a', {}, 1, 1, True, 0),
        CheckRecord('b', {}, [1, 2], [1, 3], False, 0),
    ])

    assert not obj.passed
    assert obj.human().splitlines()[-2:] == ['b   FAIL    [1,2]     [1,3]', 'demo: FAIL']


def test_satisfies():
    certificate = PartitionCertificate([(0, 3), (1, 2)], ('3/2',), [('1/2', '1/2'), ('1/2', '1/2')])
    coloring = Coloring([[0, 1], [2, 3]])

    assert satisfies(certificate, SearchConstraints(rainbow=coloring, equal_coefficients=True))
    assert satisfies(certificate, SearchConstraints(max_face_dimension=1))
    assert not satisfies(certificate, SearchConstraints(max_face_dimension=0))
    assert not satisfies(certificate, SearchConstraints(rainbow=Coloring([[0, 3], [1, 2]])))


def test_satisfies_unequal():
    certificate = PartitionCertificate([(0, 2), (1, 3)], (1,), [('1/3', '2/3'), ('1/2', '1/2')])

    assert not satisfies(certificate, SearchConstraints(rainbow=Coloring([[0, 1], [2, 3]]), equal_coefficients=True))


def test_run_suite_degree_factorial():
    report = run_suite('degree-factorial', primes=[3, 5])

    assert report.passed
    assert [record.id for record in report.records] == [
        'degree-p3', 'degree-p5', 'identity', 'composition-p3', 'generator-p3']
    assert report.records[1].observed['abs_degree'] == 24


def test_run_suite_quotient_euler():
    report = run_suite('quotient-euler')

    assert report.passed
    assert [record.id for record in report.records][-1] == 'not-free'
    assert len(report.records) == 7


def test_run_suite_collapse():
    report = run_suite('collapse')

    assert report.passed
    assert [record.observed['dimension'] for record in report.records] == [0, 1, 2, 3]


def test_run_suite_witness_none():
    assert run_suite('witness-none').passed


def test_run_suite_seeded(caplog):
    with caplog.at_level(logging.INFO):
        report = run_suite('radon-random', seed=7, count=20, dense_rationals=True)

    assert report.passed
    assert caplog.records[0].message == 'Running 1 checks of suite radon-random with 1 jobs'
    assert report.as_dict() == run_suite('radon-random', seed=7, count=20, dense_rationals=True).as_dict()
    assert report.records[0].parameters == {'seed': '7:radon-random:batch:0', 'count': 20, 'dense': True}


def test_run_suite_jobs():
    serial = run_suite('lp-oracle', count=60)
    parallel = run_suite('lp-oracle', count=60, jobs=2)

    assert serial.passed
    assert serial.as_dict() == parallel.as_dict()
    assert [record.id for record in serial.records] == ['lp-000', 'lp-001', 'beale--2', 'beale--5/4', 'beale--1',
                                                         'beale-0']


def test_run_suite_small_counts():
    for name in ('deleted-join-iso', 'tverberg-random', 'colored', 'soberon', 'snf-props'):
        report = run_suite(name, seed=1, count=2)

        assert report.passed, report.human()


def test_deleted_join_stabilizer_checks():
    options = Options('deleted-join-iso', 0, None, DEFAULT_PRIMES, False)
    checks = {check.id: check for check in SUITES['deleted-join-iso'](options)}

    record = _execute(checks['free-N1-r3'])

    assert record.passed
    assert record.observed['fixed_full_facets'] == 0
    assert record.observed['fixed_facets'] == 3

    audits = {check.id: check for check in SUITES['colored'](Options('colored', 0, 2, DEFAULT_PRIMES, False))}

    assert _execute(audits['audit-d2-r3-k1-color_pigeonhole-class6']).observed is False
