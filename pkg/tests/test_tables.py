"""
Tests for CSV input and output
"""

import io
import math

import pytest

from radialis.exceptions import ProfileFormatError, ValidationError
from radialis.model_spaces import SpaceId, make_model, radial_grid
from radialis.tables import (
    TABLE_HEADER,
    radial_table,
    read_profile_csv,
    write_profile_csv,
    write_table_csv,
)


class TestReadProfile:
    """Test parsing of profile CSV files"""

    def test_comments_and_blank_lines(self):
        """Test that comments and blank lines are skipped"""
        text = "# sampled on CH2\n\nr,value\n0.1,1.5\n# midway\n0.2, 2.5\n\n"
        assert read_profile_csv(io.StringIO(text)) == [(0.1, 1.5), (0.2, 2.5)]

    def test_wrong_header(self):
        """Test that a missing header is reported on its line"""
        with pytest.raises(ProfileFormatError) as excinfo:
            read_profile_csv(io.StringIO("# comment\nradius,H\n0.1,2\n"))
        assert excinfo.value.line == 2
        assert str(excinfo.value).startswith("line 2:")

    def test_non_numeric_field(self):
        """Test that a non-numeric field names its line"""
        with pytest.raises(ProfileFormatError) as excinfo:
            read_profile_csv(io.StringIO("r,value\n0.1,1.0\n0.2,abc\n"))
        assert excinfo.value.line == 3

    def test_wrong_column_count(self):
        """Test that rows must have two columns"""
        with pytest.raises(ProfileFormatError) as excinfo:
            read_profile_csv(io.StringIO("r,value\n0.1,1.0,2.0\n"))
        assert excinfo.value.line == 2

    def test_non_finite_field(self):
        """Test that inf and nan are rejected"""
        with pytest.raises(ProfileFormatError):
            read_profile_csv(io.StringIO("r,value\n0.1,inf\n"))

    def test_empty_file(self):
        """Test that an empty file is a format error"""
        with pytest.raises(ProfileFormatError):
            read_profile_csv(io.StringIO(""))

    def test_format_error_is_validation_error(self):
        """Test that format errors map to the validation exit code"""
        assert issubclass(ProfileFormatError, ValidationError)

    def test_written_profile_reads_back(self):
        """Test that write_profile_csv output parses to the same samples"""
        samples = [(0.1, math.pi), (0.25, 1.0 / 3.0)]
        stream = io.StringIO()
        write_profile_csv(samples, stream)
        stream.seek(0)
        assert read_profile_csv(stream) == samples


class TestRadialTable:
    """Test plotting tables"""

    def test_columns(self):
        """Test the table header and one row of H2"""
        space = make_model(SpaceId.HYPERBOLIC, 2)
        rows = radial_table(space, [1.0])
        assert list(rows[0]) == TABLE_HEADER
        assert rows[0]["theta"] == pytest.approx(math.sinh(1.0))
        assert rows[0]["omega"] == pytest.approx(math.sinh(1.0))
        assert rows[0]["H"] == pytest.approx(1.0 / math.tanh(1.0))
        assert rows[0]["Gprime"] == pytest.approx(1.0 / (2 * math.pi * math.sinh(1.0)))

    def test_write_table(self):
        """Test one header line plus one line per radius"""
        space = make_model(SpaceId.QUATERNIONIC_HYPERBOLIC, 2)
        stream = io.StringIO()
        write_table_csv(radial_table(space, radial_grid(space, 0.1, 3.0, 300)), stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == "r,theta,omega,H,Gprime"
        assert len(lines) == 301
        assert all(len(line.split(",")) == 5 for line in lines)

    def test_table_is_deterministic(self):
        """Test byte-identical output on repeated runs"""
        space = make_model(SpaceId.SPHERE, 3)
        outputs = []
        for _ in range(2):
            stream = io.StringIO()
            write_table_csv(radial_table(space, radial_grid(space, 0.1, 3.0, 50)), stream)
            outputs.append(stream.getvalue())
        assert outputs[0] == outputs[1]
