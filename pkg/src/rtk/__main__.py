from rtk.application.orchestration import main

main()
