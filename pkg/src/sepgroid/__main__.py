"""
This is the entry point used when run as a module (via python -m sepgroid).

Note this should never do anything more than call the main function. The main
function invoked here has its own set of tests.
"""

from sepgroid.main import main

main()
