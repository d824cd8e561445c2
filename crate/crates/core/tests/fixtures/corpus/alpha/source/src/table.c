int t0 = 0;
int t1 = 1;
int t2 = 2;
int t3 = 3;
int t4 = 4;
int t5 = 5;
int t6 = 6;
int t7 = 7;
int t8 = 8;
int t9 = 9;
int t10 = 10;
int t11 = 11;
int t12 = 12;
int t13 = 13;
int t14 = 14;
int t15 = 15;
int t16 = 16;
int t17 = 17;
int t18 = 18;
int t19 = 19;
int t20 = 20;
int t21 = 21;
int t22 = 22;
int t23 = 23;
int t24 = 24;
int t25 = 25;
int t26 = 26;
int t27 = 27;
int t28 = 28;
int t29 = 29;
int t30 = 30;
int t31 = 31;
int t32 = 32;
int t33 = 33;
int t34 = 34;
int t35 = 35;
int t36 = 36;
int t37 = 37;
int t38 = 38;
int t39 = 39;
int t40 = 40;
int t41 = 41;
int t42 = 42;
int t43 = 43;
int t44 = 44;
int t45 = 45;
int t46 = 46;
int t47 = 47;
int t48 = 48;
int t49 = 49;
int t50 = 50;
int t51 = 51;
int t52 = 52;
int t53 = 53;
int t54 = 54;
int t55 = 55;
int t56 = 56;
int t57 = 57;
int t58 = 58;
int t59 = 59;
int t60 = 60;
int t61 = 61;
int t62 = 62;
int t63 = 63;
int t64 = 64;
int t65 = 65;
int t66 = 66;
int t67 = 67;
int t68 = 68;
int t69 = 69;
int t70 = 70;
int t71 = 71;
int t72 = 72;
int t73 = 73;
int t74 = 74;
int t75 = 75;
int t76 = 76;
int t77 = 77;
int t78 = 78;
int t79 = 79;
int t80 = 80;
int t81 = 81;
int t82 = 82;
int t83 = 83;
int t84 = 84;
int t85 = 85;
int t86 = 86;
int t87 = 87;
int t88 = 88;
int t89 = 89;
int t90 = 90;
int t91 = 91;
int t92 = 92;
int t93 = 93;
int t94 = 94;
int t95 = 95;
int t96 = 96;
int t97 = 97;
int t98 = 98;
int t99 = 99;
int t100 = 100;
int t101 = 101;
int t102 = 102;
int t103 = 103;
int t104 = 104;
int t105 = 105;
int t106 = 106;
int t107 = 107;
int t108 = 108;
int t109 = 109;
int t110 = 110;
int t111 = 111;
int t112 = 112;
int t113 = 113;
int t114 = 114;
int t115 = 115;
int t116 = 116;
int t117 = 117;
int t118 = 118;
int t119 = 119;
int t120 = 120;
int t121 = 121;
int t122 = 122;
int t123 = 123;
int t124 = 124;
int t125 = 125;
int t126 = 126;
int t127 = 127;
int t128 = 128;
int t129 = 129;
int t130 = 130;
int t131 = 131;
int t132 = 132;
int t133 = 133;
int t134 = 134;
int t135 = 135;
int t136 = 136;
int t137 = 137;
int t138 = 138;
int t139 = 139;
int t140 = 140;
int t141 = 141;
int t142 = 142;
int t143 = 143;
int t144 = 144;
int t145 = 145;
int t146 = 146;
int t147 = 147;
int t148 = 148;
int t149 = 149;
int t150 = 150;
int t151 = 151;
int t152 = 152;
int t153 = 153;
int t154 = 154;
int t155 = 155;
int t156 = 156;
int t157 = 157;
int t158 = 158;
int t159 = 159;
int t160 = 160;
int t161 = 161;
int t162 = 162;
int t163 = 163;
int t164 = 164;
int t165 = 165;
int t166 = 166;
int t167 = 167;
int t168 = 168;
int t169 = 169;
int t170 = 170;
int t171 = 171;
int t172 = 172;
int t173 = 173;
int t174 = 174;
int t175 = 175;
int t176 = 176;
int t177 = 177;
int t178 = 178;
int t179 = 179;
int t180 = 180;
int t181 = 181;
int t182 = 182;
int t183 = 183;
int t184 = 184;
int t185 = 185;
int t186 = 186;
int t187 = 187;
int t188 = 188;
int t189 = 189;
int t190 = 190;
int t191 = 191;
int t192 = 192;
int t193 = 193;
int t194 = 194;
int t195 = 195;
int t196 = 196;
int t197 = 197;
int t198 = 198;
int t199 = 199;
int t200 = 200;
int t201 = 201;
int t202 = 202;
int t203 = 203;
int t204 = 204;
int t205 = 205;
int t206 = 206;
int t207 = 207;
int t208 = 208;
int t209 = 209;
int t210 = 210;
int t211 = 211;
int t212 = 212;
int t213 = 213;
int t214 = 214;
int t215 = 215;
int t216 = 216;
int t217 = 217;
int t218 = 218;
int t219 = 219;
int t220 = 220;
int t221 = 221;
int t222 = 222;
int t223 = 223;
int t224 = 224;
int t225 = 225;
int t226 = 226;
int t227 = 227;
int t228 = 228;
int t229 = 229;
int t230 = 230;
int t231 = 231;
int t232 = 232;
int t233 = 233;
int t234 = 234;
int t235 = 235;
int t236 = 236;
int t237 = 237;
int t238 = 238;
int t239 = 239;
int t240 = 240;
int t241 = 241;
int t242 = 242;
int t243 = 243;
int t244 = 244;
int t245 = 245;
int t246 = 246;
int t247 = 247;
int t248 = 248;
int t249 = 249;
int t250 = 250;
int t251 = 251;
int t252 = 252;
int t253 = 253;
int t254 = 254;
int t255 = 255;
int t256 = 256;
int t257 = 257;
int t258 = 258;
int t259 = 259;
int t260 = 260;
int t261 = 261;
int t262 = 262;
int t263 = 263;
int t264 = 264;
int t265 = 265;
int t266 = 266;
int t267 = 267;
int t268 = 268;
int t269 = 269;
int t270 = 270;
int t271 = 271;
int t272 = 272;
int t273 = 273;
int t274 = 274;
int t275 = 275;
int t276 = 276;
int t277 = 277;
int t278 = 278;
int t279 = 279;
int t280 = 280;
int t281 = 281;
int t282 = 282;
int t283 = 283;
int t284 = 284;
int t285 = 285;
int t286 = 286;
int t287 = 287;
int t288 = 288;
int t289 = 289;
int t290 = 290;
int t291 = 291;
int t292 = 292;
int t293 = 293;
int t294 = 294;
int t295 = 295;
int t296 = 296;
int t297 = 297;
int t298 = 298;
int t299 = 299;
int t300 = 300;
int t301 = 301;
int t302 = 302;
int t303 = 303;
int t304 = 304;
int t305 = 305;
int t306 = 306;
int t307 = 307;
int t308 = 308;
int t309 = 309;
int t310 = 310;
int t311 = 311;
int t312 = 312;
int t313 = 313;
int t314 = 314;
int t315 = 315;
int t316 = 316;
int t317 = 317;
int t318 = 318;
int t319 = 319;
int t320 = 320;
int t321 = 321;
int t322 = 322;
int t323 = 323;
int t324 = 324;
int t325 = 325;
int t326 = 326;
int t327 = 327;
int t328 = 328;
int t329 = 329;
int t330 = 330;
int t331 = 331;
int t332 = 332;
int t333 = 333;
int t334 = 334;
int t335 = 335;
int t336 = 336;
int t337 = 337;
int t338 = 338;
int t339 = 339;
int t340 = 340;
int t341 = 341;
int t342 = 342;
int t343 = 343;
int t344 = 344;
int t345 = 345;
int t346 = 346;
int t347 = 347;
int t348 = 348;
int t349 = 349;
int t350 = 350;
int t351 = 351;
int t352 = 352;
int t353 = 353;
int t354 = 354;
int t355 = 355;
int t356 = 356;
int t357 = 357;
int t358 = 358;
int t359 = 359;
int t360 = 360;
int t361 = 361;
int t362 = 362;
int t363 = 363;
int t364 = 364;
int t365 = 365;
int t366 = 366;
int t367 = 367;
int t368 = 368;
int t369 = 369;
int t370 = 370;
int t371 = 371;
int t372 = 372;
int t373 = 373;
int t374 = 374;
int t375 = 375;
int t376 = 376;
int t377 = 377;
int t378 = 378;
int t379 = 379;
int t380 = 380;
int t381 = 381;
int t382 = 382;
int t383 = 383;
int t384 = 384;
int t385 = 385;
int t386 = 386;
int t387 = 387;
int t388 = 388;
int t389 = 389;
int t390 = 390;
int t391 = 391;
int t392 = 392;
int t393 = 393;
int t394 = 394;
int t395 = 395;
int t396 = 396;
int t397 = 397;
int t398 = 398;
int t399 = 399;
int t400 = 400;
int t401 = 401;
int t402 = 402;
int t403 = 403;
int t404 = 404;
int t405 = 405;
int t406 = 406;
int t407 = 407;
int t408 = 408;
int t409 = 409;
int t410 = 410;
int t411 = 411;
int t412 = 412;
int t413 = 413;
int t414 = 414;
int t415 = 415;
int t416 = 416;
int t417 = 417;
int t418 = 418;
int t419 = 419;
int t420 = 420;
int t421 = 421;
int t422 = 422;
int t423 = 423;
int t424 = 424;
int t425 = 425;
int t426 = 426;
int t427 = 427;
int t428 = 428;
int t429 = 429;
int t430 = 430;
int t431 = 431;
int t432 = 432;
int t433 = 433;
int t434 = 434;
int t435 = 435;
int t436 = 436;
int t437 = 437;
int t438 = 438;
int t439 = 439;
int t440 = 440;
int t441 = 441;
int t442 = 442;
int t443 = 443;
int t444 = 444;
int t445 = 445;
int t446 = 446;
int t447 = 447;
int t448 = 448;
int t449 = 449;
int t450 = 450;
int t451 = 451;
int t452 = 452;
int t453 = 453;
int t454 = 454;
int t455 = 455;
int t456 = 456;
int t457 = 457;
int t458 = 458;
int t459 = 459;
int t460 = 460;
int t461 = 461;
int t462 = 462;
int t463 = 463;
int t464 = 464;
int t465 = 465;
int t466 = 466;
int t467 = 467;
int t468 = 468;
int t469 = 469;
int t470 = 470;
int t471 = 471;
int t472 = 472;
int t473 = 473;
int t474 = 474;
int t475 = 475;
int t476 = 476;
int t477 = 477;
int t478 = 478;
int t479 = 479;
int t480 = 480;
int t481 = 481;
int t482 = 482;
int t483 = 483;
int t484 = 484;
int t485 = 485;
int t486 = 486;
int t487 = 487;
int t488 = 488;
int t489 = 489;
int t490 = 490;
int t491 = 491;
int t492 = 492;
int t493 = 493;
int t494 = 494;
int t495 = 495;
int t496 = 496;
int t497 = 497;
int t498 = 498;
int t499 = 499;
int t500 = 500;
int t501 = 501;
int t502 = 502;
int t503 = 503;
int t504 = 504;
int t505 = 505;
int t506 = 506;
int t507 = 507;
int t508 = 508;
int t509 = 509;
int t510 = 510;
int t511 = 511;
int t512 = 512;
int t513 = 513;
int t514 = 514;
int t515 = 515;
int t516 = 516;
int t517 = 517;
int t518 = 518;
int t519 = 519;
int t520 = 520;
int t521 = 521;
int t522 = 522;
int t523 = 523;
int t524 = 524;
int t525 = 525;
int t526 = 526;
int t527 = 527;
int t528 = 528;
int t529 = 529;
int t530 = 530;
int t531 = 531;
int t532 = 532;
int t533 = 533;
int t534 = 534;
int t535 = 535;
int t536 = 536;
int t537 = 537;
int t538 = 538;
int t539 = 539;
int t540 = 540;
int t541 = 541;
int t542 = 542;
int t543 = 543;
int t544 = 544;
int t545 = 545;
int t546 = 546;
int t547 = 547;
int t548 = 548;
int t549 = 549;
int t550 = 550;
int t551 = 551;
int t552 = 552;
int t553 = 553;
int t554 = 554;
int t555 = 555;
int t556 = 556;
int t557 = 557;
int t558 = 558;
int t559 = 559;
int t560 = 560;
int t561 = 561;
int t562 = 562;
int t563 = 563;
int t564 = 564;
int t565 = 565;
int t566 = 566;
int t567 = 567;
int t568 = 568;
int t569 = 569;
int t570 = 570;
int t571 = 571;
int t572 = 572;
int t573 = 573;
int t574 = 574;
int t575 = 575;
int t576 = 576;
int t577 = 577;
int t578 = 578;
int t579 = 579;
int t580 = 580;
int t581 = 581;
int t582 = 582;
int t583 = 583;
int t584 = 584;
int t585 = 585;
int t586 = 586;
int t587 = 587;
int t588 = 588;
int t589 = 589;
int t590 = 590;
int t591 = 591;
int t592 = 592;
int t593 = 593;
int t594 = 594;
int t595 = 595;
int t596 = 596;
int t597 = 597;
int t598 = 598;
int t599 = 599;
int t600 = 600;
int t601 = 601;
int t602 = 602;
int t603 = 603;
int t604 = 604;
int t605 = 605;
int t606 = 606;
int t607 = 607;
int t608 = 608;
int t609 = 609;
int t610 = 610;
int t611 = 611;
int t612 = 612;
int t613 = 613;
int t614 = 614;
int t615 = 615;
int t616 = 616;
int t617 = 617;
int t618 = 618;
int t619 = 619;
int t620 = 620;
int t621 = 621;
int t622 = 622;
int t623 = 623;
int t624 = 624;
int t625 = 625;
int t626 = 626;
int t627 = 627;
int t628 = 628;
int t629 = 629;
int t630 = 630;
int t631 = 631;
int t632 = 632;
int t633 = 633;
int t634 = 634;
int t635 = 635;
int t636 = 636;
int t637 = 637;
int t638 = 638;
int t639 = 639;
int t640 = 640;
int t641 = 641;
int t642 = 642;
int t643 = 643;
int t644 = 644;
int t645 = 645;
int t646 = 646;
int t647 = 647;
int t648 = 648;
int t649 = 649;
int t650 = 650;
int t651 = 651;
int t652 = 652;
int t653 = 653;
int t654 = 654;
int t655 = 655;
int t656 = 656;
int t657 = 657;
int t658 = 658;
int t659 = 659;
int t660 = 660;
int t661 = 661;
int t662 = 662;
int t663 = 663;
int t664 = 664;
int t665 = 665;
int t666 = 666;
int t667 = 667;
int t668 = 668;
int t669 = 669;
int t670 = 670;
int t671 = 671;
int t672 = 672;
int t673 = 673;
int t674 = 674;
int t675 = 675;
int t676 = 676;
int t677 = 677;
int t678 = 678;
int t679 = 679;
int t680 = 680;
int t681 = 681;
int t682 = 682;
int t683 = 683;
int t684 = 684;
int t685 = 685;
int t686 = 686;
int t687 = 687;
int t688 = 688;
int t689 = 689;
int t690 = 690;
int t691 = 691;
int t692 = 692;
int t693 = 693;
int t694 = 694;
int t695 = 695;
int t696 = 696;
int t697 = 697;
int t698 = 698;
int t699 = 699;
int t700 = 700;
int t701 = 701;
int t702 = 702;
int t703 = 703;
int t704 = 704;
int t705 = 705;
int t706 = 706;
int t707 = 707;
int t708 = 708;
int t709 = 709;
int t710 = 710;
int t711 = 711;
int t712 = 712;
int t713 = 713;
int t714 = 714;
int t715 = 715;
int t716 = 716;
int t717 = 717;
int t718 = 718;
int t719 = 719;
int t720 = 720;
int t721 = 721;
int t722 = 722;
int t723 = 723;
int t724 = 724;
int t725 = 725;
int t726 = 726;
int t727 = 727;
int t728 = 728;
int t729 = 729;
int t730 = 730;
int t731 = 731;
int t732 = 732;
int t733 = 733;
int t734 = 734;
int t735 = 735;
int t736 = 736;
int t737 = 737;
int t738 = 738;
int t739 = 739;
int t740 = 740;
int t741 = 741;
int t742 = 742;
int t743 = 743;
int t744 = 744;
int t745 = 745;
int t746 = 746;
int t747 = 747;
int t748 = 748;
int t749 = 749;
int t750 = 750;
int t751 = 751;
int t752 = 752;
int t753 = 753;
int t754 = 754;
int t755 = 755;
int t756 = 756;
int t757 = 757;
int t758 = 758;
int t759 = 759;
int t760 = 760;
int t761 = 761;
int t762 = 762;
int t763 = 763;
int t764 = 764;
int t765 = 765;
int t766 = 766;
int t767 = 767;
int t768 = 768;
int t769 = 769;
int t770 = 770;
int t771 = 771;
int t772 = 772;
int t773 = 773;
int t774 = 774;
int t775 = 775;
int t776 = 776;
int t777 = 777;
int t778 = 778;
int t779 = 779;
int t780 = 780;
int t781 = 781;
int t782 = 782;
int t783 = 783;
int t784 = 784;
int t785 = 785;
int t786 = 786;
int t787 = 787;
int t788 = 788;
int t789 = 789;
int t790 = 790;
int t791 = 791;
int t792 = 792;
int t793 = 793;
int t794 = 794;
int t795 = 795;
int t796 = 796;
int t797 = 797;
int t798 = 798;
int t799 = 799;
int t800 = 800;
int t801 = 801;
int t802 = 802;
int t803 = 803;
int t804 = 804;
int t805 = 805;
int t806 = 806;
int t807 = 807;
int t808 = 808;
int t809 = 809;
int t810 = 810;
int t811 = 811;
int t812 = 812;
int t813 = 813;
int t814 = 814;
int t815 = 815;
int t816 = 816;
int t817 = 817;
int t818 = 818;
int t819 = 819;
int t820 = 820;
int t821 = 821;
int t822 = 822;
int t823 = 823;
int t824 = 824;
int t825 = 825;
int t826 = 826;
int t827 = 827;
int t828 = 828;
int t829 = 829;
int t830 = 830;
int t831 = 831;
int t832 = 832;
int t833 = 833;
int t834 = 834;
int t835 = 835;
int t836 = 836;
int t837 = 837;
int t838 = 838;
int t839 = 839;
int t840 = 840;
int t841 = 841;
int t842 = 842;
int t843 = 843;
int t844 = 844;
int t845 = 845;
int t846 = 846;
int t847 = 847;
int t848 = 848;
int t849 = 849;
int t850 = 850;
int t851 = 851;
int t852 = 852;
int t853 = 853;
int t854 = 854;
int t855 = 855;
int t856 = 856;
int t857 = 857;
int t858 = 858;
int t859 = 859;
int t860 = 860;
int t861 = 861;
int t862 = 862;
int t863 = 863;
int t864 = 864;
int t865 = 865;
int t866 = 866;
int t867 = 867;
int t868 = 868;
int t869 = 869;
int t870 = 870;
int t871 = 871;
int t872 = 872;
int t873 = 873;
int t874 = 874;
int t875 = 875;
int t876 = 876;
int t877 = 877;
int t878 = 878;
int t879 = 879;
int t880 = 880;
int t881 = 881;
int t882 = 882;
int t883 = 883;
int t884 = 884;
int t885 = 885;
int t886 = 886;
int t887 = 887;
int t888 = 888;
int t889 = 889;
int t890 = 890;
int t891 = 891;
int t892 = 892;
int t893 = 893;
int t894 = 894;
int t895 = 895;
int t896 = 896;
int t897 = 897;
int t898 = 898;
int t899 = 899;
int t900 = 900;
int t901 = 901;
int t902 = 902;
int t903 = 903;
int t904 = 904;
int t905 = 905;
int t906 = 906;
int t907 = 907;
int t908 = 908;
int t909 = 909;
int t910 = 910;
int t911 = 911;
int t912 = 912;
int t913 = 913;
int t914 = 914;
int t915 = 915;
int t916 = 916;
int t917 = 917;
int t918 = 918;
int t919 = 919;
int t920 = 920;
int t921 = 921;
int t922 = 922;
int t923 = 923;
int t924 = 924;
int t925 = 925;
int t926 = 926;
int t927 = 927;
int t928 = 928;
int t929 = 929;
int t930 = 930;
int t931 = 931;
int t932 = 932;
int t933 = 933;
int t934 = 934;
int t935 = 935;
int t936 = 936;
int t937 = 937;
int t938 = 938;
int t939 = 939;
int t940 = 940;
int t941 = 941;
int t942 = 942;
int t943 = 943;
int t944 = 944;
int t945 = 945;
int t946 = 946;
int t947 = 947;
int t948 = 948;
int t949 = 949;
int t950 = 950;
int t951 = 951;
int t952 = 952;
int t953 = 953;
int t954 = 954;
int t955 = 955;
int t956 = 956;
int t957 = 957;
int t958 = 958;
int t959 = 959;
int t960 = 960;
int t961 = 961;
int t962 = 962;
int t963 = 963;
int t964 = 964;
int t965 = 965;
int t966 = 966;
int t967 = 967;
int t968 = 968;
int t969 = 969;
int t970 = 970;
int t971 = 971;
int t972 = 972;
int t973 = 973;
int t974 = 974;
int t975 = 975;
int t976 = 976;
int t977 = 977;
int t978 = 978;
int t979 = 979;
int t980 = 980;
int t981 = 981;
int t982 = 982;
int t983 = 983;
int t984 = 984;
int t985 = 985;
int t986 = 986;
int t987 = 987;
int t988 = 988;
int t989 = 989;
int t990 = 990;
int t991 = 991;
int t992 = 992;
int t993 = 993;
int t994 = 994;
int t995 = 995;
int t996 = 996;
int t997 = 997;
int t998 = 998;
int t999 = 999;
int t1000 = 1000;
