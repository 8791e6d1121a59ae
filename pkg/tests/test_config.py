import os
import unittest
from unittest.mock import patch

from hopf_integrality.utils.config import ConfigError, get_gb_budget, get_power_degree_limit, get_witness_budget
from hopf_integrality.utils.const import (
    DEFAULT_GB_BUDGET,
    DEFAULT_POWER_DEGREE_LIMIT,
    HOPF_INTEGRALITY_GB_BUDGET,
    HOPF_INTEGRALITY_POWER_DEGREE_LIMIT,
    HOPF_INTEGRALITY_WITNESS_BUDGET,
)


class TestEnvironmentSettings(unittest.TestCase):
    @patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        self.assertEqual(get_gb_budget(), DEFAULT_GB_BUDGET)
        self.assertEqual(get_power_degree_limit(), DEFAULT_POWER_DEGREE_LIMIT)

    @patch.dict(os.environ, {HOPF_INTEGRALITY_WITNESS_BUDGET: '17', HOPF_INTEGRALITY_GB_BUDGET: ' '})
    def test_override_and_blank(self):
        self.assertEqual(get_witness_budget(), 17)
        self.assertEqual(get_gb_budget(), DEFAULT_GB_BUDGET)

    @patch.dict(os.environ, {HOPF_INTEGRALITY_POWER_DEGREE_LIMIT: 'lots'})
    def test_not_a_number(self):
        with self.assertRaises(ConfigError):
            get_power_degree_limit()

    @patch.dict(os.environ, {HOPF_INTEGRALITY_GB_BUDGET: '0'})
    def test_non_positive(self):
        with self.assertRaises(ConfigError) as ctx:
            get_gb_budget()
        self.assertIn(HOPF_INTEGRALITY_GB_BUDGET, str(ctx.exception))


if __name__ == '__main__':
    unittest.main()
