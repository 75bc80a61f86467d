import unittest

from services.lattice.domain.errors import PreconditionError, WitnessStepError
from services.lattice.domain.minors import parse_witness
from services.lattice.domain.oracle import family_G, uniform
from services.lattice.domain.presentation import parse_presentation
from services.lattice.domain.use_cases import (
    MinorUseCase,
    OracleUseCase,
    PosetUseCase,
    PresentationUseCase,
    SquareUseCase,
)

FIGURE = "EEEEENNNNENEN/NNNNNEEENEEEE"


class TestPresentationUseCase(unittest.TestCase):
    """Test cases for PresentationUseCase."""

    def setUp(self):
        self.use_case = PresentationUseCase()

    def test_info(self):
        result = self.use_case.info(parse_presentation("EEENNN/ENENEN"))
        self.assertEqual(result["m"], 3)
        self.assertEqual(result["r"], 3)
        self.assertEqual(result["bases"], 5)
        self.assertEqual(result["loops"], [1])
        self.assertEqual(result["coloops"], [6])
        self.assertEqual(result["intervals"], [[2, 4], [4, 5], [6, 6]])
        self.assertTrue(result["nested"])
        self.assertFalse(result["uniform"])

    def test_info_of_uniform(self):
        result = self.use_case.info(parse_presentation("EENN/NNEE"))
        self.assertEqual(result["square_width"], 2)
        self.assertEqual(result["gap_profile"], [1, 2, 1, 0])
        self.assertTrue(result["uniform"])

    def test_bases(self):
        result = self.use_case.bases(parse_presentation("EENN/NNEE"), cap=2)
        self.assertEqual(result["count"], 6)
        self.assertEqual(result["bases"], [[1, 2], [1, 3]])

    def test_bases_count_only(self):
        result = self.use_case.bases(parse_presentation("EEENNN/NENENE"), count_only=True)
        self.assertEqual(result, {"count": 14})

    def test_dual_and_sum(self):
        dual = self.use_case.dual(parse_presentation("ENE/NEE"))
        self.assertEqual((dual["presentation"]["P"], dual["presentation"]["Q"]), ("ENN", "NEN"))
        total = self.use_case.direct_sum(parse_presentation("EN/NE"), parse_presentation("EN/EN"))
        self.assertEqual(total["presentation"]["text"], "P=ENEN\nQ=NEEN\n")


class TestMinorUseCase(unittest.TestCase):
    """Test cases for MinorUseCase."""

    def setUp(self):
        self.use_case = MinorUseCase()

    def test_delete(self):
        result = self.use_case.delete(parse_presentation("EENN/NNEE"), 1)
        self.assertEqual(result["element"], "ordinary")
        self.assertEqual(result["presentation"]["P"], "ENN")

    def test_contract_loop(self):
        result = self.use_case.contract(parse_presentation("EEENNN/ENENEN"), 1)
        self.assertEqual(result["element"], "loop")
        self.assertEqual(result["presentation"]["Q"], "NENEN")

    def test_apply_witness_error(self):
        with self.assertRaises(WitnessStepError):
            self.use_case.apply_witness(parse_presentation("EN/NE"), parse_witness("D 5"))

    def test_is_minor(self):
        result = self.use_case.is_minor(parse_presentation("ENN/NNE"), parse_presentation("EENN/NNEE"))
        self.assertTrue(result["minor"])
        self.assertEqual(result["witness"]["steps"], ["D 1"])
        self.assertEqual(result["witness"]["deletions"], 1)

    def test_not_minor(self):
        result = self.use_case.is_minor(parse_presentation("NE/NE"), parse_presentation("EN/EN"))
        self.assertEqual(result, {"minor": False, "witness": None})

    def test_uniform_minor(self):
        result = self.use_case.uniform_minor(parse_presentation(FIGURE), 3)
        self.assertEqual(result["presentation"]["text"], "P=EEENNN\nQ=NNNEEE\n")
        self.assertEqual(result["witness"]["deletions"], 4)
        self.assertEqual(result["witness"]["contractions"], 3)


class TestSquareUseCase(unittest.TestCase):
    """Test cases for SquareUseCase."""

    def setUp(self):
        self.use_case = SquareUseCase()

    def test_squares(self):
        result = self.use_case.squares(parse_presentation("ENE/NEE"))
        self.assertEqual(result["square_width"], 1)
        self.assertEqual(result["squares"], [{"position": 1, "size": 1, "proper": False}])
        self.assertIsNone(result["first_proper"])

    def test_first_proper_square(self):
        result = self.use_case.squares(parse_presentation(FIGURE))
        self.assertEqual(result["first_proper"], 6)

    def test_pull_and_glue(self):
        pulled = self.use_case.pull(parse_presentation(FIGURE), 7)
        self.assertEqual(pulled["k"], 3)
        self.assertEqual(pulled["top"]["offset"], 5)
        glued = self.use_case.glue(
            parse_presentation(pulled["bottom"]["text"]),
            parse_presentation(pulled["top"]["text"]),
            pulled["k"],
        )
        self.assertEqual(glued["presentation"]["text"], "P=EEEEENNNNENEN\nQ=NNNNNEEENEEEE\n")

    def test_check_glue_minor(self):
        result = self.use_case.check_glue_minor(
            parse_presentation(FIGURE), 7, parse_witness("D 2"), parse_witness("")
        )
        self.assertEqual(result, {"minor": True})


class TestOracleUseCase(unittest.TestCase):
    """Test cases for OracleUseCase."""

    def setUp(self):
        self.use_case = OracleUseCase()

    def test_family(self):
        result = self.use_case.family("g", 2)
        self.assertEqual(result["rank"], 2)
        self.assertEqual(result["matroid"]["n"], 6)
        self.assertEqual(len(result["matroid"]["bases"]), 9)

    def test_unknown_family(self):
        with self.assertRaises(PreconditionError):
            self.use_case.family("X", 4)

    def test_branch_width(self):
        result = self.use_case.branch_width(uniform(2, 4))
        self.assertEqual(result["branch_width"], 3)
        self.assertEqual(len(result["tree"]), 5)
        leaves = {name for edge in result["tree"] for name in edge if not name.startswith("node")}
        self.assertEqual(leaves, {"1", "2", "3", "4"})

    def test_isomorphic(self):
        result = self.use_case.isomorphic(uniform(1, 2), uniform(1, 2))
        self.assertEqual(result, {"isomorphic": True, "mapping": {"1": 1, "2": 2}})

    def test_oracle_minor(self):
        result = self.use_case.oracle_minor(uniform(1, 2), uniform(2, 4))
        self.assertTrue(result["minor"])
        self.assertEqual(len(result["deleted"]) + len(result["contracted"]), 2)

    def test_oracle_minor_none(self):
        self.assertEqual(self.use_case.oracle_minor(uniform(2, 2), uniform(1, 4)), {"minor": False})

    def test_find_presentation(self):
        result = self.use_case.find_presentation(family_G(2))
        self.assertTrue(result["found"])


class TestPosetUseCase(unittest.TestCase):
    """Test cases for PosetUseCase."""

    def setUp(self):
        self.use_case = PosetUseCase()

    def test_antichain(self):
        items = [parse_presentation(text) for text in ("EN/EN", "NE/NE", "ENE/ENE")]
        result = self.use_case.antichain(items)
        self.assertEqual(result["items"], ["EN/EN", "NE/NE", "ENE/ENE"])
        self.assertEqual(result["relation"], [[1, 0, 1], [0, 1, 1], [0, 0, 1]])
        self.assertEqual(result["max_antichain"], [0, 1])
        self.assertEqual(len(result["longest_chain"]), 2)

    def test_oracle_antichain(self):
        result = self.use_case.oracle_antichain([uniform(1, 2), uniform(2, 4)])
        self.assertEqual(result["relation"], [[1, 1], [0, 1]])

    def test_base_case(self):
        result = self.use_case.base_case(parse_presentation("NE/NE"), parse_presentation("EN/EN"))
        self.assertEqual(result["codes"], [{"loops": 1, "coloops": 1}, {"loops": 1, "coloops": 1}])
        self.assertTrue(result["matroid_minor"])
        self.assertFalse(result["presentation_minor"])


if __name__ == "__main__":
    unittest.main()
