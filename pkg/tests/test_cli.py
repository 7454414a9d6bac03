"""명령행 진입점과 verify 매니페스트 테스트"""
import sys
from pathlib import Path

import pytest

# 프로젝트 루트를 경로에 추가
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.cli import main, run
from src.cli.manifest import load_manifest, load_manifest_text, run_manifest
from src.utils.errors import ParseError


@pytest.fixture
def path(corpus_dir):
    """코퍼스 파일 절대 경로"""
    return lambda name: str(corpus_dir / name)


class TestCommands:
    """하위 명령 출력과 종료 코드"""

    def test_validate(self, path):
        assert run(["validate", f"--complex={path('circle_z.fc')}"]).output == "ok"

    @pytest.mark.parametrize("name", ["bad_action.fc", "bad_ring.fc", "no_such_file.fc"])
    def test_invalid_input_exit_code(self, path, name):
        result = run(["validate", f"--complex={path(name)}"])
        assert result.exit_code == 2
        assert result.output == ""

    def test_zero_denominator_is_input_error(self, tmp_path, caplog):
        source = tmp_path / "div0.fc"
        source.write_text("ring Q\ngen a deg=0 action=1/0\n", encoding="utf-8")
        result = run(["validate", f"--complex={source}"])
        assert result.exit_code == 2
        assert f"{source}:2:13" in caplog.text

    def test_homology_torsion(self, path):
        result = run(["homology", f"--complex={path('rp2_z.fc')}", "--degree=1"])
        assert result.exit_code == 0
        assert result.output == "H_1: rank=0 torsion=[2]"

    def test_homology_all_degrees(self, path):
        result = run(["homology", f"--complex={path('circle_z.fc')}"])
        assert result.output == "H_0: rank=1 torsion=[]\nH_1: rank=1 torsion=[]"

    def test_spectrum(self, path):
        assert run(["spectrum", f"--complex={path('torus_f2.fc')}"]).output == "0 1 2"

    @pytest.mark.parametrize("method", ["auto", "scan"])
    def test_spectral(self, path, method):
        result = run(["spectral", f"--complex={path('circle_z.fc')}",
                      f"--class={path('circle_max.cl')}", f"--method={method}"])
        assert result.output == "1"

    def test_spectral_boundary(self, path):
        result = run(["spectral", f"--complex={path('rp2_z.fc')}", f"--class={path('rp2_twice_c1.cl')}"])
        assert result.output == "-inf"

    def test_spectral_several_classes(self, path):
        result = run(["spectral", f"--complex={path('rp2_z.fc')}", f"--class={path('rp2_classes.cl')}"])
        assert result.output == "c0: 0\nc1: 1\ntwice_c1: -inf"

    def test_spectral_novikov(self, path):
        result = run(["spectral", f"--complex={path('circle_novikov_f2.fc')}",
                      f"--class={path('novikov_t_max.cl')}", "--window=-2:2"])
        assert result.output == "0"

    def test_spectral_requires_class(self, path):
        assert run(["spectral", f"--complex={path('circle_z.fc')}"]).exit_code == 2

    def test_dualize_cocycle(self, path):
        result = run(["dualize", f"--complex={path('circle_z.fc')}", f"--class={path('circle_max_dual.cl')}"])
        assert result.output == "1"

    def test_dualize_emits_complex(self, path):
        output = run(["dualize", f"--complex={path('circle_z.fc')}"]).output
        assert output.splitlines()[0] == "ring Z"
        assert "gen max^v deg=-1 action=-1" in output
        assert "tag dual" in output

    def test_tensor(self, path):
        result = run(["tensor", f"--complex={path('circle_f2.fc')}", f"--complex2={path('circle_f2.fc')}",
                      f"--class={path('circle_max.cl')}", f"--class2={path('circle_max.cl')}"])
        assert result.output == "2"

    def test_lift(self, path):
        result = run(["lift", f"--complex={path('circle_f2.fc')}", "--period-degree=2", "--period-action=1"])
        assert result.output.splitlines()[0] == "ring Novikov(F2, deg=2, area=1)"

    def test_oracle(self, path):
        result = run(["oracle", f"--complex={path('torus_f2.fc')}", f"--class={path('torus_s1.cl')}"])
        assert result.output == "1"

    def test_oracle_cap(self, path):
        result = run(["oracle", f"--complex={path('circle_f2.fc')}", f"--class={path('circle_min.cl')}", "--cap=1"])
        assert result.exit_code == 2

    def test_usage_error(self):
        assert run(["frobnicate"]).exit_code == 2
        assert run([]).exit_code == 2

    def test_main_prints_output(self, path, capsys):
        assert main(["spectrum", f"--complex={path('interval_q.fc')}"]) == 0
        assert capsys.readouterr().out == "0 1\n"


class TestManifest:
    """verify 매니페스트"""

    def test_corpus_manifest_passes(self, corpus_dir):
        outcome = run_manifest(load_manifest(corpus_dir / "corpus.mf"), max_workers=2)
        failed = [f"{r.job.line}: {r.detail}" for r in outcome.results if r.status != "ok"]
        assert failed == []
        assert outcome.exit_code == 0

    def test_verify_command(self, path):
        result = run(["verify", f"--manifest={path('corpus.mf')}"])
        assert result.exit_code == 0
        assert result.output.splitlines()[-1].endswith("fail=0 error=0")

    def test_results_follow_manifest_order(self, corpus_dir):
        text = ("# 주석\n"
                "spectrum complex=interval_q.fc expect=\"0 1\"\n"
                "\n"
                "check diagonal complex=torus_z.fc\n"
                "homology complex=rp2_z.fc degree=1 expect=\"H_1: rank=0 torsion=[2]\"\n")
        manifest = load_manifest_text(text, corpus_dir)
        outcome = run_manifest(manifest, max_workers=3)
        assert [r.job.line for r in outcome.results] == [2, 4, 5]
        assert [r.status for r in outcome.results] == ["ok", "ok", "ok"]

    def test_expectation_mismatch_fails(self, corpus_dir):
        text = "spectral complex=circle_z.fc class=circle_max.cl expect=0\n"
        outcome = run_manifest(load_manifest_text(text, corpus_dir))
        assert outcome.exit_code == 1
        assert outcome.results[0].status == "fail"

    def test_input_error_beats_failure(self, corpus_dir):
        text = ("spectral complex=circle_z.fc class=circle_max.cl expect=0\n"
                "validate complex=bad_action.fc\n"
                "check shift complex=circle_z.fc s=abc\n")
        outcome = run_manifest(load_manifest_text(text, corpus_dir))
        assert [r.status for r in outcome.results] == ["fail", "error", "error"]
        assert outcome.exit_code == 2
        assert outcome.format().splitlines()[-1] == "summary: jobs=3 ok=0 fail=1 error=2"

    def test_expected_exit_code(self, corpus_dir):
        outcome = run_manifest(load_manifest_text("validate complex=bad_ring.fc exit=2\n", corpus_dir))
        assert outcome.exit_code == 0

    @pytest.mark.parametrize("text", [
        "frobnicate complex=circle_z.fc\n",
        "check nothing complex=circle_z.fc\n",
        "spectral complex=missing.fc\n",
        "spectral complex\n",
        "spectral expect=\"unterminated\n",
    ])
    def test_malformed_manifest(self, corpus_dir, text):
        with pytest.raises(ParseError) as exc_info:
            load_manifest_text(text, corpus_dir)
        assert exc_info.value.line == 1
