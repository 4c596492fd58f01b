// Local language of diagonal squares, every pixel projected to a.
%format ts
%project 1 -> 'a'
%project 0 -> 'a'
theta = { # # # # # #
          # 1 0 0 0 #
          # 0 1 0 0 #
          # 0 0 1 0 #
          # 0 0 0 1 #
          # # # # # # }
