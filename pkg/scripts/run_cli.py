#!/usr/bin/env python3
"""명령행 진입 스크립트 (validate / homology / spectrum / spectral / dualize / tensor / lift / verify / oracle)"""
import sys
from pathlib import Path

# 프로젝트 루트를 경로에 추가 (어디서 실행해도 동작하도록)
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.cli.commands import main


if __name__ == "__main__":
    sys.exit(main())
