# anchors the test directory on sys.path so the shared oracles import
