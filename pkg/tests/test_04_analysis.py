from . import CurlHVITest, skipIf, SLOW

from curlhvi.core.utils import ConfigurationError, UsageError
from curlhvi.mesh import build_structured
from curlhvi.dg import DGSpace, l2_project
from curlhvi.analysis import (E_LIN, DiscreteReference, StudyConfig,
                              ConvergenceReport, REPORT_COLUMNS, eoc,
                              l2_error, energy_error, energy_norm,
                              parse_reference, run_study, solve_level)
import numpy as np

TABLE_L2 = [2.1929e-01, 6.0856e-02, 1.5644e-02, 3.8917e-03]
TABLE_ENERGY = [1.5957, 8.3933e-1, 4.2970e-1, 2.1416e-1]


class TestEOC(CurlHVITest):
    def test_examples(self):
        self.assertTrue(np.allclose(eoc([4.0, 1.0]), [2.0]))
        self.assertTrue(np.allclose(eoc([1.0, 0.5, 0.25]), [1.0, 1.0]))
        self.assertEqual(len(eoc([1.0])), 0)
        self.assertEqual(len(eoc([])), 0)
        orders = eoc([1.0, 0.0, 0.5])
        self.assertTrue(np.all(np.isnan(orders)))
        self.assertTrue(np.isnan(eoc([-1.0, 0.5])[0]))

    def test_table_orders(self):
        self.assertTrue(np.allclose(eoc(TABLE_L2), [1.8494, 1.9598, 2.0071],
                                    atol=1e-3))
        self.assertTrue(np.allclose(eoc(TABLE_ENERGY),
                                    [0.9269, 0.9659, 1.0047], atol=1e-3))


class TestNorms(CurlHVITest):
    def test_zero_field(self):
        space = DGSpace(build_structured(4))
        zero = space.zeros()
        self.assertAlmostEqual(l2_error(space, zero, E_LIN), np.sqrt(0.5),
                               delta=1e-3)
        self.assertAlmostEqual(energy_error(space, zero, E_LIN, 1000.0),
                               np.sqrt(0.5 + np.pi ** 2), delta=1e-2)
        self.assertEqual(energy_norm(space, zero, 1000.0), 0.0)

    def test_energy_norm_of_constant(self):
        space = DGSpace(build_structured(1))
        u = l2_project(space, lambda x, y: (0.0, 2.0))
        # boundary jumps on the two vertical sides: 2 * 2 faces
        alpha = 10.0 / (np.sqrt(2.0) / 2)
        expected = 4.0 + 4 * alpha * 4.0 * 0.5
        self.assertAlmostEqual(energy_norm(space, u, 10.0) ** 2, expected,
                               delta=1e-9)

    def test_identical_fields(self):
        space = DGSpace(build_structured(2))
        E = l2_project(space, E_LIN.field)
        reference = DiscreteReference(space, E)
        self.assertAlmostEqual(l2_error(space, E, reference), 0.0,
                               delta=1e-12)
        self.assertAlmostEqual(energy_error(space, E, reference, 1000.0),
                               0.0, delta=1e-10)

    def test_nested_exact(self):
        def field(x, y):
            return x + 2 * y, 3 * x - y

        coarse = DGSpace(build_structured(1))
        fine = DGSpace(build_structured(3))
        E = l2_project(coarse, field)
        reference = DiscreteReference(fine, l2_project(fine, field))
        self.assertAlmostEqual(l2_error(coarse, E, reference), 0.0,
                               delta=1e-12)
        self.assertAlmostEqual(energy_error(coarse, E, reference, 1000.0),
                               0.0, delta=1e-9)
        analytic = l2_error(coarse, coarse.zeros(), E_LIN)
        nested = l2_error(coarse, coarse.zeros(),
                          DiscreteReference(fine, l2_project(fine,
                                                             E_LIN.field)))
        self.assertAlmostEqual(analytic, nested, delta=2e-2)

    def test_nested_errors(self):
        coarse = DGSpace(build_structured(2))
        E = coarse.zeros()
        with self.assertRaises(UsageError):
            l2_error(coarse, E, DiscreteReference(
                DGSpace(build_structured(1)), np.zeros(48)))
        p2 = DGSpace(build_structured(3), degree=2)
        with self.assertRaises(UsageError):
            l2_error(coarse, E, DiscreteReference(p2, p2.zeros()))
        with self.assertRaises(UsageError):
            DiscreteReference(p2, np.zeros(5))
        with self.assertRaises(UsageError):
            l2_error(coarse, E, 'analytic')


class TestStudy(CurlHVITest):
    def test_parse_reference(self):
        self.assertEqual(parse_reference('analytic'), ('analytic', None))
        self.assertEqual(parse_reference('nested:6'), ('nested', 6))
        self.assertEqual(parse_reference(('nested', 5)), ('nested', 5))
        for bad in ('nested', 'nested:x', 'analytic:3', 'exact', 6):
            with self.assertRaises(ConfigurationError):
                parse_reference(bad)

    def test_config(self):
        config = StudyConfig()
        self.assertEqual(config.levels, [1, 2, 3, 4])
        self.assertEqual(config.eta, 1000.0)
        self.assertEqual(config.degree, 1)
        self.assertFalse(config.potential.is_linear)
        self.assertTrue(StudyConfig(mode='linear').potential.is_linear)
        for kwds in (dict(levels=[2, 1]), dict(levels=[1, 1]),
                     dict(levels=[-1]), dict(levels=[1, 2],
                                             reference='nested:2'),
                     dict(mode='nonlinear'), dict(degree=3),
                     dict(eta=0.0), dict(a=0.001, b=0.002),
                     dict(eps_stop=0.0)):
            with self.assertRaises(ConfigurationError):
                StudyConfig(**kwds)

    def test_empty(self):
        report = run_study(StudyConfig(levels=[]))
        self.assertEqual(len(report), 0)
        self.assertEqual(list(report.table.columns), REPORT_COLUMNS)
        self.assertEqual(report.to_csv().strip(), ','.join(REPORT_COLUMNS))
        self.assertIsNone(report.finest)

    def test_solve_level(self):
        sol = solve_level(2, StudyConfig(levels=[2]))
        self.assertEqual(sol.level, 2)
        self.assertEqual(sol.space.n_dofs, 192)
        self.assertTrue(sol.result.converged)
        self.assertEqual(sol.A.shape, (192, 192))

    def test_linear_analytic(self):
        config = StudyConfig(levels=[2, 3, 4], mode='linear')
        report = run_study(config)
        table = report.table
        self.assertEqual(list(table['level']), [2, 3, 4])
        self.assertTrue(np.allclose(table['h'], [0.25, 0.125, 0.0625]))
        self.assertEqual(list(table['dofs']), [192, 768, 3072])
        self.assertTrue(np.isnan(table['l2_order'].iloc[0]))
        self.assertTrue(np.isnan(table['energy_order'].iloc[0]))
        self.assertTrue(np.all(table['l2_order'].iloc[1:] >= 1.8))
        energy = table['energy_order'].iloc[1:]
        self.assertTrue(np.all((energy >= 0.85) & (energy <= 1.15)))
        self.assertTrue(np.all(table['uzawa_iterations'] == 1))
        self.assertTrue(report.all_converged)
        finest = report.finest
        self.assertEqual(finest.level, 4)
        self.assertEqual(finest.space.n_dofs, 3072)
        again = solve_level(4, config)
        self.assertTrue(np.allclose(finest.result.E.values,
                                    again.result.E.values))

    def test_level_gaps(self):
        report = run_study(StudyConfig(levels=[1, 3], mode='linear'))
        orders = report.table['l2_order']
        # orders are per halving of h
        self.assertGreater(orders.iloc[1], 1.5)
        self.assertLess(orders.iloc[1], 2.5)

    def test_nested_study(self):
        config = StudyConfig(levels=[1, 2], reference='nested:4')
        report = run_study(config)
        errors = report.table['l2_error']
        self.assertTrue(np.all(errors > 0))
        self.assertGreater(errors.iloc[0], errors.iloc[1])
        self.assertTrue(report.all_converged)

    def test_csv(self):
        config = StudyConfig(levels=[1, 2], mode='linear')
        first = run_study(config).to_csv()
        second = run_study(config).to_csv()
        self.assertEqual(first, second)
        lines = first.strip().splitlines()
        self.assertEqual(lines[0], ','.join(REPORT_COLUMNS))
        cells = lines[1].split(',')
        self.assertEqual(cells[0], '1')
        self.assertEqual(cells[4], '')
        self.assertEqual(cells[6], '')
        self.assertEqual(len(lines), 3)
        text = ConvergenceReport().to_text()
        self.assertIn('l2_error', text)

    @skipIf(not SLOW, 'set CURLHVI_SLOW to run the full studies')
    def test_reference_table(self):
        config = StudyConfig(levels=[1, 2, 3, 4], reference='nested:6',
                             eta=1000.0, a=0.004, b=0.002, beta=100.0)
        table = run_study(config).table
        self.assertAlmostEqual(table['l2_order'].iloc[-1], 2.0071,
                               delta=0.15)
        self.assertAlmostEqual(table['energy_order'].iloc[-1], 1.0047,
                               delta=0.15)
        for computed, published in zip(table['l2_error'], TABLE_L2):
            self.assertTrue(0.5 <= computed / published <= 2.0)
        for computed, published in zip(table['energy_error'], TABLE_ENERGY):
            self.assertTrue(0.5 <= computed / published <= 2.0)

    @skipIf(not SLOW, 'set CURLHVI_SLOW to run the full studies')
    def test_linear_oracle(self):
        config = StudyConfig(levels=[2, 3, 4, 5], mode='linear')
        table = run_study(config).table
        self.assertTrue(np.all(table['l2_order'].iloc[1:] >= 1.9))
        energy = table['energy_order'].iloc[1:]
        self.assertTrue(np.all((energy >= 0.9) & (energy <= 1.1)))
        space = DGSpace(build_structured(5))
        self.assertAlmostEqual(l2_error(space, space.zeros(), E_LIN),
                               np.sqrt(0.5), delta=1e-3)


if __name__ == '__main__':
    CurlHVITest.main()
