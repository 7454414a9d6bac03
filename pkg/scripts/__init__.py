"""실행 스크립트 패키지 (run_cli, run_verify, init_corpus)"""
