from nablacomp.cli import run

run()
