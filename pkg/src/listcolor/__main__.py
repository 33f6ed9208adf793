from listcolor.cli import main

main()
